// Command-line front end: compute AG (and related) spectral data, stream
// graph enumerations, and run the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agspec/closed_form.hpp"
#include "agspec/enumerate.hpp"
#include "agspec/graph.hpp"
#include "agspec/report.hpp"
#include "agspec/spectral.hpp"
#include "agspec/verify.hpp"
#include "agspec/weights.hpp"

namespace {

struct GraphInput {
    std::string graph6;
    std::string family;
    int n = 0;
    std::string edges_file;

    void attach(CLI::App* cmd) {
        auto* g6 = cmd->add_option("--graph6", graph6, "graph in graph6 encoding");
        auto* fam = cmd->add_option("--family", family,
                                    "named family: cycle|star-plus-edge|g1|g2|g3");
        auto* nn = cmd->add_option("--n", n, "order for --family");
        auto* ef = cmd->add_option("--edges", edges_file, "file with 'n m' header and 'u v' lines");
        g6->excludes(fam)->excludes(ef);
        fam->excludes(ef)->needs(nn);
    }

    agspec::Graph resolve() const {
        if (!graph6.empty()) return agspec::from_graph6(graph6);
        if (!family.empty()) {
            auto f = agspec::family_from_name(family);
            if (!f) throw CLI::ValidationError("--family", "unknown family '" + family + "'");
            return agspec::build_family(*f, n);
        }
        if (!edges_file.empty()) {
            std::ifstream in(edges_file);
            if (!in) throw CLI::ValidationError("--edges", "cannot open " + edges_file);
            return agspec::read_edge_list(in);
        }
        throw CLI::ValidationError("graph", "one of --graph6, --family, --edges is required");
    }
};

void print_value(double v, bool full) {
    char buf[40];
    std::snprintf(buf, sizeof buf, full ? "%.17g" : "%.10f", v);
    std::cout << buf << '\n';
}

agspec::WeightScheme resolve_scheme(const std::string& name) {
    auto s = agspec::scheme_from_name(name);
    if (!s) throw CLI::ValidationError("--scheme", "unknown scheme '" + name + "'");
    return *s;
}

void emit_graph(const agspec::Graph& g, const std::string& format) {
    if (format == "graph6") {
        std::cout << agspec::to_graph6(g) << '\n';
    } else {
        // single line: header then flattened edge pairs
        std::cout << g.order() << ' ' << g.size();
        for (auto [u, v] : g.edges()) std::cout << ' ' << u << ' ' << v;
        std::cout << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetic-geometric spectral radius toolkit"};
    app.require_subcommand(1);

    // ---- radius / spectrum / charpoly ----
    GraphInput radius_in, spectrum_in, charpoly_in;
    std::string radius_scheme = "ag", spectrum_scheme = "ag", charpoly_scheme = "ag";
    std::string radius_prec = "default", spectrum_prec = "default", charpoly_prec = "default";

    auto* radius = app.add_subcommand("radius", "print the spectral radius");
    radius->add_option("--scheme", radius_scheme, "ag|randic|abc|adj")->capture_default_str();
    radius->add_option("--precision", radius_prec, "default|full")->capture_default_str();
    radius_in.attach(radius);

    auto* spectrum = app.add_subcommand("spectrum", "print all eigenvalues, descending");
    spectrum->add_option("--scheme", spectrum_scheme, "ag|randic|abc|adj")->capture_default_str();
    spectrum->add_option("--precision", spectrum_prec, "default|full")->capture_default_str();
    spectrum_in.attach(spectrum);

    auto* charpoly = app.add_subcommand("charpoly", "print monic characteristic polynomial coefficients");
    charpoly->add_option("--scheme", charpoly_scheme, "ag|randic|abc|adj")->capture_default_str();
    charpoly->add_option("--precision", charpoly_prec, "default|full")->capture_default_str();
    charpoly_in.attach(charpoly);

    // ---- enumerate ----
    int enum_n = 0, enum_delta = -1;
    std::string enum_class = "unicyclic", enum_format = "graph6";
    auto* enumerate = app.add_subcommand("enumerate", "stream one graph per isomorphism class");
    enumerate->add_option("--n", enum_n, "order")->required();
    enumerate->add_option("--class", enum_class, "unicyclic|bicyclic")->capture_default_str();
    enumerate->add_option("--max-degree", enum_delta, "restrict to maximum degree (unicyclic only)");
    enumerate->add_option("--format", enum_format, "graph6|edges")->capture_default_str();

    // ---- family ----
    std::string family_name_opt;
    int family_n = 0;
    std::string family_format = "graph6";
    auto* family = app.add_subcommand("family", "print a named family graph");
    family->add_option("--name", family_name_opt, "cycle|star-plus-edge|g1|g2|g3")->required();
    family->add_option("--n", family_n, "order")->required();
    family->add_option("--format", family_format, "graph6|edges")->capture_default_str();

    // ---- verify ----
    std::string suite;
    int verify_n_max = 0;
    bool verify_json = false;
    std::string verify_data_dir;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "table1|table2|table3|table4|table5|theorem|lemma5|lemma6|bounds")
        ->required();
    verify->add_option("--n-max", verify_n_max, "cap the order range where applicable");
    verify->add_flag("--json", verify_json, "emit a JSON report");
    verify->add_option("--data-dir", verify_data_dir, "override the reference table directory");

    // ---- explore-bicyclic ----
    int explore_n = 0, explore_top = 2;
    auto* explore = app.add_subcommand("explore-bicyclic", "rank bicyclic graphs by AG radius");
    explore->add_option("--n", explore_n, "order (5..10)")->required();
    explore->add_option("--top", explore_top, "how many leaders to print")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit 0; parse errors are usage errors
    }

    try {
        if (radius->parsed()) {
            const agspec::Graph g = radius_in.resolve();
            const auto m = agspec::weighted_adjacency(g, resolve_scheme(radius_scheme));
            print_value(agspec::full_spectrum(m).eigenvalues.front(), radius_prec == "full");
        } else if (spectrum->parsed()) {
            const agspec::Graph g = spectrum_in.resolve();
            const auto m = agspec::weighted_adjacency(g, resolve_scheme(spectrum_scheme));
            for (double ev : agspec::full_spectrum(m).eigenvalues)
                print_value(ev, spectrum_prec == "full");
        } else if (charpoly->parsed()) {
            const agspec::Graph g = charpoly_in.resolve();
            const auto m = agspec::weighted_adjacency(g, resolve_scheme(charpoly_scheme));
            const auto coeffs = agspec::char_poly(m);
            char buf[40];
            for (size_t i = 0; i < coeffs.size(); ++i) {
                std::snprintf(buf, sizeof buf, charpoly_prec == "full" ? "%.17g" : "%.10g",
                              coeffs[i]);
                std::cout << (i ? " " : "") << buf;
            }
            std::cout << '\n';
        } else if (enumerate->parsed()) {
            std::vector<agspec::Graph> graphs;
            if (enum_class == "unicyclic") {
                graphs = enum_delta >= 0
                             ? agspec::enumerate_unicyclic_max_degree(enum_n, enum_delta)
                             : agspec::enumerate_unicyclic(enum_n);
            } else if (enum_class == "bicyclic") {
                if (enum_delta >= 0)
                    throw CLI::ValidationError("--max-degree", "only supported for unicyclic");
                graphs = agspec::enumerate_bicyclic(enum_n);
            } else {
                throw CLI::ValidationError("--class", "unknown class '" + enum_class + "'");
            }
            for (const auto& g : graphs) emit_graph(g, enum_format);
        } else if (family->parsed()) {
            auto f = agspec::family_from_name(family_name_opt);
            if (!f) throw CLI::ValidationError("--name", "unknown family '" + family_name_opt + "'");
            const agspec::Graph g = agspec::build_family(*f, family_n);
            if (family_format == "edges")
                agspec::write_edge_list(std::cout, g);
            else
                emit_graph(g, family_format);
        } else if (verify->parsed()) {
            agspec::VerifyOptions opts;
            opts.n_max = verify_n_max;
            opts.data_dir = verify_data_dir;
            agspec::VerificationReport report;
            if (suite == "table1" || suite == "table2" || suite == "table3" ||
                suite == "table4" || suite == "table5") {
                report = agspec::reproduce_table(suite[5] - '0', opts);
            } else if (suite == "theorem") {
                const int n_max = verify_n_max > 0 ? verify_n_max : 16;
                report.suite = "theorem";
                for (int n = 5; n <= n_max; ++n) {
                    auto part = agspec::verify_theorem(n, opts);
                    report.checks.insert(report.checks.end(), part.checks.begin(),
                                         part.checks.end());
                }
            } else if (suite == "lemma5") {
                report = agspec::verify_lemma5(8, verify_n_max > 0 ? verify_n_max : 100);
            } else if (suite == "lemma6") {
                report = agspec::verify_lemma6(8, verify_n_max > 0 ? verify_n_max : 100);
            } else if (suite == "bounds") {
                report = agspec::verify_bounds(opts);
            } else {
                throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
            }
            if (verify_json)
                std::cout << agspec::report_to_json(report).dump(2) << '\n';
            else
                agspec::print_report(std::cout, report);
            return report.passed() ? 0 : 1;
        } else if (explore->parsed()) {
            const auto ranking = agspec::explore_bicyclic(explore_n, explore_top);
            std::cout << "order " << ranking.order << ": " << ranking.class_count
                      << " bicyclic classes\n";
            char buf[40];
            for (size_t r = 0; r < ranking.top.size(); ++r) {
                std::snprintf(buf, sizeof buf, "%.10f", ranking.top[r].rho);
                std::cout << "rank " << r + 1 << ": rho_ag " << buf << "  max-degree "
                          << ranking.top[r].max_degree << "  " << ranking.top[r].form.bytes
                          << '\n';
            }
            std::snprintf(buf, sizeof buf, "%.10f", ranking.minimum.rho);
            std::cout << "minimum: rho_ag " << buf << "  max-degree "
                      << ranking.minimum.max_degree << "  " << ranking.minimum.form.bytes << '\n';
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
