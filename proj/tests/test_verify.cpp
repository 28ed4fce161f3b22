#include <doctest.h>

#include <cmath>
#include <fstream>

#include "agspec/golden.hpp"
#include "agspec/report.hpp"
#include "agspec/verify.hpp"

using agspec::CheckStatus;
using agspec::VerificationReport;

namespace {

// Minimal validator for the JSON-Schema subset the published schema uses:
// type, required, additionalProperties, enum, items, minimum, properties.
bool validate_schema(const nlohmann::json& schema, const nlohmann::json& value,
                     std::string* why) {
    if (schema.contains("type")) {
        const std::string type = schema["type"];
        const bool ok = (type == "object" && value.is_object()) ||
                        (type == "array" && value.is_array()) ||
                        (type == "string" && value.is_string()) ||
                        (type == "number" && value.is_number()) ||
                        (type == "integer" && value.is_number_integer());
        if (!ok) {
            *why = "expected " + type + ", got " + value.dump();
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& option : schema["enum"])
            if (option == value) found = true;
        if (!found) {
            *why = "value " + value.dump() + " not in enum";
            return false;
        }
    }
    if (schema.contains("minimum") && value.is_number() &&
        value.get<double>() < schema["minimum"].get<double>()) {
        *why = "value below minimum";
        return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& req : schema["required"])
                if (!value.contains(req.get<std::string>())) {
                    *why = "missing required field " + req.get<std::string>();
                    return false;
                }
        const auto& props = schema.contains("properties") ? schema["properties"]
                                                          : nlohmann::json::object();
        for (const auto& [key, sub] : value.items()) {
            if (props.contains(key)) {
                if (!validate_schema(props[key], sub, why)) return false;
            } else if (schema.contains("additionalProperties") &&
                       schema["additionalProperties"] == false) {
                *why = "unexpected field " + key;
                return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& item : value)
            if (!validate_schema(schema["items"], item, why)) return false;
    return true;
}

bool all_value_checks_pass(const VerificationReport& r) {
    for (const auto& c : r.checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

}  // namespace

TEST_CASE("golden tables load with the right shapes") {
    CHECK(agspec::load_golden_table(1).size() == 42);
    CHECK(agspec::load_golden_table(2).size() == 96);
    CHECK(agspec::load_golden_table(3).size() == 5);
    CHECK(agspec::load_golden_table(4).size() == 13);
    CHECK(agspec::load_golden_table(5).size() == 33);
    for (int t = 1; t <= 5; ++t)
        for (const auto& gv : agspec::load_golden_table(t)) {
            CHECK(!gv.provenance.empty());
            CHECK(gv.value > 0.0);
            CHECK((gv.tolerance == 1e-3 || gv.tolerance == 2e-3));
        }
    CHECK_THROWS_AS(agspec::load_golden_table(6), std::invalid_argument);
}

TEST_CASE("tolerance follows the printed precision") {
    CHECK(agspec::tolerance_for_printed("2.9523") == 1e-3);
    CHECK(agspec::tolerance_for_printed("3.374") == 2e-3);
    CHECK(agspec::tolerance_for_printed("2.75") == 2e-3);
    CHECK(agspec::tolerance_for_printed("2") == 2e-3);
}

TEST_CASE("golden values round-trip through the report serializer") {
    const auto golden = agspec::load_golden_table(3);
    VerificationReport report{"roundtrip", {}};
    for (const auto& gv : golden) {
        agspec::Check c;
        c.id = "t3/" + gv.row;
        c.expected = {gv.value};
        c.provenance = gv.provenance;
        report.checks.push_back(std::move(c));
    }
    const auto parsed = nlohmann::json::parse(agspec::report_to_json(report).dump());
    for (size_t k = 0; k < golden.size(); ++k) {
        CHECK(parsed["checks"][k]["expected"][0].get<double>() == golden[k].value);
        CHECK(parsed["checks"][k]["provenance"].get<std::string>() == golden[k].provenance);
    }
}

TEST_CASE("table 3 reproduces the printed multiset") {
    const auto report = agspec::reproduce_table(3);
    CHECK(all_value_checks_pass(report));
    // five entries plus the count check
    CHECK(report.checks.size() == 6);
    CHECK(report.checks[1].expected[0] == 2.0);
    CHECK(report.checks[2].expected[0] == 2.2066);
    CHECK(report.checks[5].expected[0] == 2.6035);
}

TEST_CASE("table 1 reproduces all printed radii") {
    const auto report = agspec::reproduce_table(1);
    CHECK(report.checks.size() == 42);
    CHECK(all_value_checks_pass(report));
}

TEST_CASE("theorem verification on both enumeration branches") {
    const auto r7 = agspec::verify_theorem(7);
    CHECK(all_value_checks_pass(r7));
    // the top-four check carries the largest radius, ~3.4526
    for (const auto& c : r7.checks)
        if (c.id == "theorem/n=7/top4-order") {
            REQUIRE(c.computed.size() == 4);
            CHECK(std::abs((c.computed[0]) - (3.4526)) <= 5e-4);
        }

    const auto r8 = agspec::verify_theorem(8);
    CHECK(all_value_checks_pass(r8));
    for (const auto& c : r8.checks)
        if (c.id == "theorem/n=8/top4-order") {
            CHECK(std::abs((c.computed[1]) - (3.4571)) <= 5e-4);  // G2
            CHECK(std::abs((c.computed[2]) - (3.3765)) <= 5e-4);  // G1
            CHECK(std::abs((c.computed[3]) - (3.3755)) <= 5e-4);  // G3
        }

    const auto r16 = agspec::verify_theorem(16);
    CHECK(all_value_checks_pass(r16));
    const auto r12 = agspec::verify_theorem(12);
    CHECK(all_value_checks_pass(r12));
    CHECK(r12.count(CheckStatus::Info) == 1);
}

TEST_CASE("star bracket suite skips below its range") {
    const auto report = agspec::verify_lemma5(7, 9);
    REQUIRE(report.checks.size() == 3);
    CHECK(report.checks[0].status == CheckStatus::Skipped);
    CHECK(report.checks[1].status == CheckStatus::Pass);
    CHECK(report.checks[2].status == CheckStatus::Pass);
    CHECK(report.passed());
}

TEST_CASE("ordering chains across all three branches") {
    const auto report = agspec::verify_lemma6(8, 25);
    CHECK(report.passed());
    CHECK(report.count(CheckStatus::Fail) == 0);
    CHECK(report.count(CheckStatus::Info) == 8);  // one per n in 8..15
}

TEST_CASE("verification reports are deterministic") {
    const auto a = agspec::verify_theorem(8);
    const auto b = agspec::verify_theorem(8);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t k = 0; k < a.checks.size(); ++k) {
        CHECK(a.checks[k].id == b.checks[k].id);
        CHECK(a.checks[k].status == b.checks[k].status);
        CHECK(a.checks[k].computed == b.checks[k].computed);  // bit-identical
        CHECK(a.checks[k].expected == b.checks[k].expected);
    }
}

TEST_CASE("report JSON validates against the published schema") {
    std::ifstream schema_file(AGSPEC_SCHEMA_PATH);
    REQUIRE(schema_file.good());
    const auto schema = nlohmann::json::parse(schema_file);
    std::string why;
    for (const auto& report :
         {agspec::verify_lemma5(7, 10), agspec::reproduce_table(3), agspec::verify_theorem(12)}) {
        const auto doc = agspec::report_to_json(report);
        INFO(why);
        CHECK(validate_schema(schema, doc, &why));
    }
}

TEST_CASE("bicyclic exploration") {
    const auto ranking = agspec::explore_bicyclic(5, 3);
    CHECK(ranking.order == 5);
    CHECK(ranking.class_count == 5);
    REQUIRE(ranking.top.size() == 3);
    CHECK(ranking.top[0].rho >= ranking.top[1].rho);
    CHECK(ranking.top[1].rho >= ranking.top[2].rho);
    CHECK(ranking.minimum.rho <= ranking.top[2].rho);

    // deterministic across runs
    const auto again = agspec::explore_bicyclic(5, 3);
    for (size_t k = 0; k < 3; ++k) {
        CHECK(again.top[k].rho == ranking.top[k].rho);
        CHECK(again.top[k].form == ranking.top[k].form);
    }
}
