#include "agspec/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace agspec {

bool VerificationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const Check& c) { return c.status == CheckStatus::Fail; });
}

int VerificationReport::count(CheckStatus s) const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::Info: return "info";
    }
    return "?";
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : report.checks) {
        checks.push_back({{"id", c.id},
                          {"status", status_name(c.status)},
                          {"computed", c.computed},
                          {"expected", c.expected},
                          {"tolerance", c.tolerance},
                          {"provenance", c.provenance},
                          {"runtime_ms", c.runtime_ms}});
    }
    return nlohmann::json{{"suite", report.suite},
                          {"checks", checks},
                          {"summary",
                           {{"total", report.checks.size()},
                            {"pass", report.count(CheckStatus::Pass)},
                            {"fail", report.count(CheckStatus::Fail)},
                            {"skipped", report.count(CheckStatus::Skipped)},
                            {"info", report.count(CheckStatus::Info)}}}};
}

namespace {

std::string join_values(const std::vector<double>& values) {
    if (values.empty()) return "-";
    std::string out;
    char buf[40];
    const size_t shown = std::min<size_t>(values.size(), 4);
    for (size_t i = 0; i < shown; ++i) {
        std::snprintf(buf, sizeof buf, "%.6g", values[i]);
        if (i) out += ' ';
        out += buf;
    }
    if (values.size() > shown) out += " ...";
    return out;
}

}  // namespace

void print_report(std::ostream& os, const VerificationReport& report) {
    size_t idw = 8;
    for (const Check& c : report.checks) idw = std::max(idw, c.id.size());
    for (const Check& c : report.checks) {
        char line[512];
        std::snprintf(line, sizeof line, "%-7s %-*s computed: %-28s expected: %s",
                      status_name(c.status), static_cast<int>(idw), c.id.c_str(),
                      join_values(c.computed).c_str(), join_values(c.expected).c_str());
        os << line << '\n';
    }
    os << report.suite << ": " << report.count(CheckStatus::Pass) << " pass, "
       << report.count(CheckStatus::Fail) << " fail, " << report.count(CheckStatus::Skipped)
       << " skipped, " << report.count(CheckStatus::Info) << " info\n";
}

}  // namespace agspec
