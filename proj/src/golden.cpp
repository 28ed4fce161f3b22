#include "agspec/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef AGSPEC_SOURCE_DATA_DIR
#define AGSPEC_SOURCE_DATA_DIR "data"
#endif

namespace agspec {

std::string golden_data_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("AGSPEC_DATA_DIR"); env && *env) return env;
    return AGSPEC_SOURCE_DATA_DIR;
}

double tolerance_for_printed(const std::string& text) {
    const auto dot = text.find('.');
    const size_t decimals = dot == std::string::npos ? 0 : text.size() - dot - 1;
    return decimals >= 4 ? 1e-3 : 2e-3;
}

std::vector<GoldenValue> load_golden_table(int table_id, const std::string& data_dir) {
    if (table_id < 1 || table_id > 5)
        throw std::invalid_argument("load_golden_table: table id must be 1..5");
    const std::string path =
        golden_data_dir(data_dir) + "/table" + std::to_string(table_id) + ".csv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_golden_table: cannot open " + path);

    std::string line;
    if (!std::getline(in, line) || line != "row,column,value,provenance")
        throw std::runtime_error("load_golden_table: bad header in " + path);

    std::vector<GoldenValue> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        GoldenValue gv;
        if (!std::getline(ls, gv.row, ',') || !std::getline(ls, gv.column, ',') ||
            !std::getline(ls, gv.text, ',') || !std::getline(ls, gv.provenance))
            throw std::runtime_error("load_golden_table: malformed line in " + path + ": " + line);
        gv.value = std::stod(gv.text);
        gv.tolerance = tolerance_for_printed(gv.text);
        out.push_back(std::move(gv));
    }
    if (out.empty()) throw std::runtime_error("load_golden_table: no rows in " + path);
    return out;
}

}  // namespace agspec
