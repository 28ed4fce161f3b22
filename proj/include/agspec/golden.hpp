#ifndef AGSPEC_GOLDEN_HPP
#define AGSPEC_GOLDEN_HPP

#include <string>
#include <vector>

namespace agspec {

// One reference value from the bundled CSV tables. The printed text is
// kept verbatim; the comparison tolerance follows the printed precision
// (1e-3 with four decimals, 2e-3 with fewer).
struct GoldenValue {
    std::string row;
    std::string column;
    std::string text;
    double value = 0.0;
    double tolerance = 0.0;
    std::string provenance;
};

// Directory holding table1.csv .. table5.csv: explicit override, else
// $AGSPEC_DATA_DIR, else the directory baked in at build time.
std::string golden_data_dir(const std::string& override_dir = "");

std::vector<GoldenValue> load_golden_table(int table_id, const std::string& data_dir = "");

double tolerance_for_printed(const std::string& text);

}  // namespace agspec

#endif
