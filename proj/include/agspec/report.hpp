#ifndef AGSPEC_REPORT_HPP
#define AGSPEC_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace agspec {

enum class CheckStatus { Pass, Fail, Skipped, Info };

// One verified claim. `computed` and `expected` are scalars or ordered
// lists; for bracket/ordering claims `expected` holds the reference values
// the computation is compared against and `tolerance` is 0.
struct Check {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::vector<double> computed;
    std::vector<double> expected;
    double tolerance = 0.0;
    std::string provenance;
    double runtime_ms = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    int count(CheckStatus s) const;
};

const char* status_name(CheckStatus s);

nlohmann::json report_to_json(const VerificationReport& report);

// Aligned-column text, one line per check plus a summary.
void print_report(std::ostream& os, const VerificationReport& report);

}  // namespace agspec

#endif
