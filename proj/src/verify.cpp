#include "agspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "agspec/closed_form.hpp"
#include "agspec/enumerate.hpp"
#include "agspec/golden.hpp"
#include "agspec/spectral.hpp"
#include "agspec/weights.hpp"

namespace agspec {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Radii are considered distinct when they differ by more than this; the
// closest printed pair (6.7812 vs 6.7827 at order 15) is 1.5e-3 apart.
constexpr double kTieTolerance = 1e-7;

int thread_count(const VerifyOptions& opts, int items) {
    int t = opts.threads;
    if (t <= 0) {
        t = static_cast<int>(std::thread::hardware_concurrency());
        if (const char* env = std::getenv("AGSPEC_THREADS"); env && *env) {
            const int cap = std::atoi(env);
            if (cap > 0) t = std::min(t, cap);
        }
    }
    return std::max(1, std::min({t, items, 16}));
}

// Index-addressed parallel map: results land in a fixed slot per item, so
// the output is independent of scheduling.
std::vector<double> map_radii(const std::vector<Graph>& graphs, const VerifyOptions& opts) {
    std::vector<double> out(graphs.size());
    const int nt = thread_count(opts, static_cast<int>(graphs.size()));
    if (nt <= 1) {
        for (size_t i = 0; i < graphs.size(); ++i) out[i] = ag_spectral_radius(graphs[i]);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < graphs.size(); i = next.fetch_add(1))
                out[i] = ag_spectral_radius(graphs[i]);
        });
    for (auto& th : pool) th.join();
    return out;
}

Check make_check(std::string id, bool ok, std::vector<double> computed,
                 std::vector<double> expected, double tol, std::string provenance,
                 double runtime_ms) {
    Check c;
    c.id = std::move(id);
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    c.computed = std::move(computed);
    c.expected = std::move(expected);
    c.tolerance = tol;
    c.provenance = std::move(provenance);
    c.runtime_ms = runtime_ms;
    return c;
}

NamedFamily family_from_column(const std::string& col) {
    auto f = family_from_name(col == "G1"   ? "g1"
                              : col == "G2" ? "g2"
                              : col == "G3" ? "g3"
                                            : "");
    if (!f) throw std::runtime_error("unknown table column " + col);
    return *f;
}

VerificationReport reproduce_table1(const VerifyOptions& opts) {
    VerificationReport report{"table1", {}};
    for (const GoldenValue& gv : load_golden_table(1, opts.data_dir)) {
        const auto t0 = Clock::now();
        const int n = std::stoi(gv.row);
        const double rho = ag_spectral_radius(build_family(family_from_column(gv.column), n));
        report.checks.push_back(make_check("table1/n=" + gv.row + "/" + gv.column,
                                           std::abs(rho - gv.value) <= gv.tolerance, {rho},
                                           {gv.value}, gv.tolerance, gv.provenance, ms_since(t0)));
    }
    return report;
}

// Sorted-multiset comparison for tables whose rows cannot be identified
// per graph (the originals picture them as drawings).
void check_multiset(VerificationReport& report, const std::string& prefix,
                    const std::vector<Graph>& graphs, std::vector<GoldenValue> golden,
                    const VerifyOptions& opts) {
    const auto t0 = Clock::now();
    std::vector<double> radii = map_radii(graphs, opts);
    std::sort(radii.begin(), radii.end());
    std::sort(golden.begin(), golden.end(),
              [](const GoldenValue& a, const GoldenValue& b) { return a.value < b.value; });
    const double elapsed = ms_since(t0);

    report.checks.push_back(make_check(
        prefix + "/count", radii.size() == golden.size(),
        {static_cast<double>(radii.size())}, {static_cast<double>(golden.size())}, 0.0,
        "class count must match the table row count exactly", elapsed));
    if (radii.size() != golden.size()) return;  // size mismatch is a hard failure

    for (size_t k = 0; k < radii.size(); ++k)
        report.checks.push_back(make_check(
            prefix + "/sorted[" + std::to_string(k) + "]",
            std::abs(radii[k] - golden[k].value) <= golden[k].tolerance, {radii[k]},
            {golden[k].value}, golden[k].tolerance, golden[k].provenance, 0.0));
}

VerificationReport reproduce_table2(const VerifyOptions& opts) {
    VerificationReport report{"table2", {}};
    auto golden = load_golden_table(2, opts.data_dir);
    const int n_max = opts.n_max > 0 ? opts.n_max : 15;
    for (int n = 8; n <= n_max && n <= 15; ++n) {
        std::vector<GoldenValue> column;
        for (const GoldenValue& gv : golden)
            if (std::stoi(gv.column) == n) column.push_back(gv);
        const std::vector<Graph> graphs = enumerate_unicyclic_max_degree(n, n - 3);
        const std::string prefix = "table2/n=" + std::to_string(n);
        check_multiset(report, prefix, graphs, column, opts);

        // The classification argument needs every such class strictly below
        // (n-1.45)/2 at these orders.
        const auto t0 = Clock::now();
        double worst = 0.0;
        for (const Graph& g : graphs) worst = std::max(worst, ag_spectral_radius(g));
        const double threshold = (n - 1.45) / 2;
        report.checks.push_back(make_check(prefix + "/below-(n-1.45)/2", worst < threshold,
                                           {worst}, {threshold}, 0.0,
                                           "max over the twelve classes vs (n-1.45)/2",
                                           ms_since(t0)));
    }
    return report;
}

VerificationReport reproduce_table_full_order(int table_id, const VerifyOptions& opts) {
    const int n = table_id + 2;  // tables 3,4,5 hold orders 5,6,7
    VerificationReport report{"table" + std::to_string(table_id), {}};
    check_multiset(report, report.suite + "/n=" + std::to_string(n), enumerate_unicyclic(n),
                   load_golden_table(table_id, opts.data_dir), opts);
    return report;
}

struct NamedRadii {
    double star_plus_edge, g1, g2, g3;
    CanonicalForm star_form, g1_form, g2_form, g3_form;
};

NamedRadii named_radii(int n) {
    const Graph s = build_family(NamedFamily::StarPlusEdge, n);
    const Graph a = build_family(NamedFamily::G1, n);
    const Graph b = build_family(NamedFamily::G2, n);
    const Graph c = build_family(NamedFamily::G3, n);
    return {ag_spectral_radius(s), ag_spectral_radius(a), ag_spectral_radius(b),
            ag_spectral_radius(c), canonical_form(s),     canonical_form(a),
            canonical_form(b),     canonical_form(c)};
}

// Branch order of the top four: (i) n<=7, (ii) 8..15, (iii) n>=16.
std::vector<std::pair<std::string, const CanonicalForm*>> branch_order(const NamedRadii& r,
                                                                       int n) {
    if (n <= 7)
        return {{"S_n+e", &r.star_form}, {"G2", &r.g2_form}, {"G3", &r.g3_form}, {"G1", &r.g1_form}};
    if (n <= 15)
        return {{"S_n+e", &r.star_form}, {"G2", &r.g2_form}, {"G1", &r.g1_form}, {"G3", &r.g3_form}};
    return {{"S_n+e", &r.star_form}, {"G1", &r.g1_form}, {"G2", &r.g2_form}, {"G3", &r.g3_form}};
}

void add_chain_check(VerificationReport& report, const std::string& id,
                     std::vector<double> values, std::string provenance, double runtime_ms) {
    // strictly increasing chain
    bool ok = true;
    for (size_t i = 0; i + 1 < values.size(); ++i)
        if (!(values[i] < values[i + 1])) ok = false;
    report.checks.push_back(
        make_check(id, ok, std::move(values), {}, 0.0, std::move(provenance), runtime_ms));
}

}  // namespace

double ag_spectral_radius(const Graph& g) {
    return full_spectrum(weighted_adjacency(g, WeightScheme::AG)).eigenvalues.front();
}

VerificationReport reproduce_table(int table_id, const VerifyOptions& opts) {
    switch (table_id) {
        case 1: return reproduce_table1(opts);
        case 2: return reproduce_table2(opts);
        case 3:
        case 4:
        case 5: return reproduce_table_full_order(table_id, opts);
        default: throw std::invalid_argument("reproduce_table: table id must be 1..5");
    }
}

VerificationReport verify_theorem(int n, const VerifyOptions& opts) {
    if (n < 5) throw std::invalid_argument("verify_theorem: n must be >= 5");
    VerificationReport report{"theorem", {}};
    const std::string prefix = "theorem/n=" + std::to_string(n);
    const auto t0 = Clock::now();
    const NamedRadii named = named_radii(n);
    const auto order = branch_order(named, n);
    auto rho_of = [&](const CanonicalForm* f) {
        if (f == &named.star_form) return named.star_plus_edge;
        if (f == &named.g1_form) return named.g1;
        if (f == &named.g2_form) return named.g2;
        return named.g3;
    };

    if (n <= 10) {
        // Full enumeration: the cycle is the unique minimum and the named
        // four are the unique maxima in branch order.
        std::vector<Graph> graphs = enumerate_unicyclic(n);
        std::vector<double> radii = map_radii(graphs, opts);
        std::vector<size_t> idx(graphs.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return radii[a] < radii[b]; });

        const CanonicalForm cycle_form = canonical_form(build_family(NamedFamily::Cycle, n));
        const double min_rho = radii[idx[0]];
        report.checks.push_back(make_check(
            prefix + "/minimum-is-cycle",
            canonical_form(graphs[idx[0]]) == cycle_form && std::abs(min_rho - 2.0) <= 1e-9 &&
                radii[idx[1]] > min_rho + kTieTolerance,
            {min_rho, radii[idx[1]]}, {2.0}, 1e-9,
            "unique minimum over all classes is the cycle with radius 2", ms_since(t0)));

        bool top4_ok = true;
        std::vector<double> top_values;
        for (size_t k = 0; k < 4; ++k) {
            const size_t i = idx[idx.size() - 1 - k];
            top_values.push_back(radii[i]);
            if (canonical_form(graphs[i]) != *order[k].second) top4_ok = false;
        }
        // strict separation between ranks 1..4 and from the rest
        for (size_t k = 0; k + 1 < 4; ++k)
            if (!(top_values[k] > top_values[k + 1] + kTieTolerance)) top4_ok = false;
        const double fifth = radii[idx[idx.size() - 5]];
        report.checks.push_back(make_check(prefix + "/top4-order", top4_ok, top_values,
                                           {named.star_plus_edge, rho_of(order[1].second),
                                            rho_of(order[2].second), rho_of(order[3].second)},
                                           0.0, "top four classes in branch order", ms_since(t0)));
        report.checks.push_back(make_check(
            prefix + "/rest-below-top4", fifth < top_values[3] - kTieTolerance,
            {fifth}, {top_values[3]}, 0.0, "fifth largest strictly below the named four", 0.0));
        return report;
    }

    // Beyond enumeration reach: the named-graph ordering itself.
    std::vector<double> chain;
    for (auto it = order.rbegin(); it != order.rend(); ++it) chain.push_back(rho_of(it->second));
    add_chain_check(report, prefix + "/named-order", chain,
                    "strict ordering of the named four per branch", ms_since(t0));
    report.checks.push_back(make_check(
        prefix + "/star-bracket",
        (n - 1) / 2.0 < named.star_plus_edge && named.star_plus_edge < n / 2.0,
        {named.star_plus_edge}, {(n - 1) / 2.0, n / 2.0}, 0.0,
        "(n-1)/2 < rho(S_n+e) < n/2", 0.0));

    if (n <= 15) {
        // The remaining classes are out of enumeration reach here; record
        // the threshold constant against rho(G3) without judging it (the
        // printed tables themselves disagree with the blanket claim).
        Check info;
        info.id = prefix + "/(n-1.45)/2-vs-G3";
        info.status = CheckStatus::Info;
        info.computed = {(n - 1.45) / 2, named.g3};
        info.provenance = "recorded truth value: constant < rho(G3) is " +
                          std::string((n - 1.45) / 2 < named.g3 ? "true" : "false");
        report.checks.push_back(std::move(info));
    } else {
        const auto thr = lemma7_threshold(n, n - 3);
        report.checks.push_back(make_check(
            prefix + "/threshold-below-G3", thr && *thr < named.g3, {thr ? *thr : 0.0, named.g3},
            {}, 0.0, "every other class sits below the threshold, which sits below rho(G3)", 0.0));
    }
    return report;
}

VerificationReport verify_lemma5(int n_min, int n_max) {
    VerificationReport report{"lemma5", {}};
    for (int n = n_min; n <= n_max; ++n) {
        const std::string id = "lemma5/n=" + std::to_string(n);
        if (n < 8) {
            Check c;
            c.id = id;
            c.status = CheckStatus::Skipped;
            c.provenance = "bracket asserted for n >= 8 only";
            report.checks.push_back(std::move(c));
            continue;
        }
        const auto t0 = Clock::now();
        const double rho = ag_spectral_radius(build_family(NamedFamily::StarPlusEdge, n));
        report.checks.push_back(make_check(id, (n - 1) / 2.0 < rho && rho < n / 2.0, {rho},
                                           {(n - 1) / 2.0, n / 2.0}, 0.0,
                                           "(n-1)/2 < rho_ag(S_n+e) < n/2", ms_since(t0)));
    }
    return report;
}

VerificationReport verify_lemma6(int n_min, int n_max) {
    VerificationReport report{"lemma6", {}};
    for (int n = std::max(n_min, 8); n <= n_max; ++n) {
        const auto t0 = Clock::now();
        const NamedRadii r = named_radii(n);
        const std::string id = "lemma6/n=" + std::to_string(n);
        if (n <= 15) {
            add_chain_check(report, id, {r.g3, r.g1, r.g2, (n - 1) / 2.0},
                            "rho(G3) < rho(G1) < rho(G2) < (n-1)/2", ms_since(t0));
            Check info;
            info.id = id + "/(n-1.45)/2-vs-G3";
            info.status = CheckStatus::Info;
            info.computed = {(n - 1.45) / 2, r.g3};
            info.provenance = "recorded truth value: constant < rho(G3) is " +
                              std::string((n - 1.45) / 2 < r.g3 ? "true" : "false");
            report.checks.push_back(std::move(info));
        } else if (n <= 21) {
            add_chain_check(report, id, {(n - 1.65) / 2, r.g3, r.g2, r.g1, (n - 1) / 2.0},
                            "(n-1.65)/2 < rho(G3) < rho(G2) < rho(G1) < (n-1)/2", ms_since(t0));
        } else {
            add_chain_check(
                report, id,
                {(n - 1.75) / 2, r.g3, (n - 1.6) / 2, r.g2, (n - 1.5) / 2, r.g1, (n - 1) / 2.0},
                "(n-1.75)/2 < rho(G3) < (n-1.6)/2 < rho(G2) < (n-1.5)/2 < rho(G1) < (n-1)/2",
                ms_since(t0));
        }
    }
    return report;
}

VerificationReport verify_bounds(const VerifyOptions& opts) {
    VerificationReport report{"bounds", {}};
    const int enum_max = std::min(opts.n_max > 0 ? opts.n_max : 10, kMaxUnicyclicOrder);

    for (int n = 3; n <= enum_max; ++n) {
        const auto t0 = Clock::now();
        const std::vector<Graph> graphs = enumerate_unicyclic(n);

        double worst_row_gap = -1e300;  // max of row_image - bound; must stay <= 0
        for (const Graph& g : graphs)
            for (int v = 0; v < n; ++v)
                worst_row_gap = std::max(worst_row_gap, row_image(g, v) - lemma4_bound(g, v));
        report.checks.push_back(make_check("bounds/lemma4/n=" + std::to_string(n),
                                           worst_row_gap <= 1e-9, {worst_row_gap}, {0.0}, 1e-9,
                                           "(A_ag X)_v <= (d_v^2+2m-n+1)/(2 sqrt(d_v)) at every vertex",
                                           ms_since(t0)));

        const auto t1 = Clock::now();
        double worst_zheng = -1e300;  // max of rho - bound; must be strictly negative
        double worst_thr = -1e300;    // max of rho - threshold over applicable classes
        bool any_thr = false;
        for (const Graph& g : graphs) {
            const double rho = ag_spectral_radius(g);
            worst_zheng = std::max(worst_zheng, rho - zheng_upper_bound(n, g.size()));
            if (n >= 8) {
                if (const auto thr = lemma7_threshold(n, g.max_degree())) {
                    any_thr = true;
                    worst_thr = std::max(worst_thr, rho - *thr);
                }
            }
        }
        report.checks.push_back(make_check(
            "bounds/zheng/unicyclic/n=" + std::to_string(n), worst_zheng < 0.0, {worst_zheng},
            {0.0}, 0.0, "rho_ag strictly below the order-size bound (no unicyclic graph is a star)",
            ms_since(t1)));
        if (any_thr)
            report.checks.push_back(make_check(
                "bounds/lemma7/n=" + std::to_string(n), worst_thr < 0.0, {worst_thr}, {0.0}, 0.0,
                "rho_ag strictly below the degree-capped threshold", 0.0));
    }

    // Star equality case of the general bound, exact up to 1e-9.
    for (int n = 2; n <= 12; ++n) {
        const auto t0 = Clock::now();
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
        const double rho = ag_spectral_radius(Graph(n, std::move(edges)));
        const double bound = zheng_upper_bound(n, n - 1);
        report.checks.push_back(make_check("bounds/zheng/star/n=" + std::to_string(n),
                                           std::abs(rho - bound) <= 1e-9, {rho}, {bound}, 1e-9,
                                           "equality holds exactly for the star", ms_since(t0)));
    }

    // Sign conditions backing the brackets, over the stated ranges.
    struct SignCond {
        const char* id;
        int n_from;
        std::function<double(int)> margin;  // positive means the condition holds
    };
    const SignCond conds[] = {
        {"bounds/signs/g1-at-(n-1)/2-positive", 7,
         [](int n) { return eval_poly(PolyFamily::G1Factor, (n - 1) / 2.0, n); }},
        {"bounds/signs/g1-at-(n-1.5)/2-negative", 2,
         [](int n) { return -eval_poly(PolyFamily::G1Factor, (n - 1.5) / 2.0, n); }},
        {"bounds/signs/g2-at-(n-1.5)/2-positive", 22,
         [](int n) { return eval_poly(PolyFamily::G2Factor, (n - 1.5) / 2.0, n); }},
        {"bounds/signs/g2-at-(n-1.6)/2-negative", 2,
         [](int n) { return -eval_poly(PolyFamily::G2Factor, (n - 1.6) / 2.0, n); }},
        {"bounds/signs/g3-at-(n-1.6)/2-positive", 17,
         [](int n) { return eval_poly(PolyFamily::G3Factor, (n - 1.6) / 2.0, n); }},
        {"bounds/signs/g3-at-(n-1.75)/2-negative", 4,
         [](int n) { return -eval_poly(PolyFamily::G3Factor, (n - 1.75) / 2.0, n); }},
        {"bounds/signs/g3-d1-at-(n-1.6)/2-positive", 6,
         [](int n) { return eval_g3_derivative(1, (n - 1.6) / 2.0, n); }},
        {"bounds/signs/g3-d2-at-(n-1.6)/2-positive", 5,
         [](int n) { return eval_g3_derivative(2, (n - 1.6) / 2.0, n); }},
        {"bounds/signs/g3-d3-at-(n-1.6)/2-positive", 4,
         [](int n) { return eval_g3_derivative(3, (n - 1.6) / 2.0, n); }},
        {"bounds/signs/t1-bracket-signs", 8,
         [](int n) {
             return std::min(-eval_poly(PolyFamily::T1, (n - 1) / 2.0, n),
                             eval_poly(PolyFamily::T1, n / 2.0, n));
         }},
    };
    for (const SignCond& sc : conds) {
        const auto t0 = Clock::now();
        double worst = 1e300;
        int worst_n = sc.n_from;
        for (int n = sc.n_from; n <= 200; ++n) {
            const double m = sc.margin(n);
            if (m < worst) {
                worst = m;
                worst_n = n;
            }
        }
        report.checks.push_back(make_check(sc.id, worst > 0.0,
                                           {worst, static_cast<double>(worst_n)}, {}, 0.0,
                                           "minimum margin over the stated range up to n=200",
                                           ms_since(t0)));
    }
    return report;
}

ExtremalRanking explore_bicyclic(int n, int k, const VerifyOptions& opts) {
    if (k < 1) throw std::invalid_argument("explore_bicyclic: k must be >= 1");
    const std::vector<Graph> graphs = enumerate_bicyclic(n);
    const std::vector<double> radii = map_radii(graphs, opts);

    std::vector<size_t> idx(graphs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    // descending by radius; canonical bytes break near-ties deterministically
    std::vector<CanonicalForm> forms(graphs.size());
    for (size_t i = 0; i < graphs.size(); ++i) forms[i] = canonical_form(graphs[i]);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (std::abs(radii[a] - radii[b]) > kTieTolerance) return radii[a] > radii[b];
        return forms[a].bytes < forms[b].bytes;
    });

    ExtremalRanking ranking;
    ranking.order = n;
    ranking.class_count = static_cast<int>(graphs.size());
    for (size_t r = 0; r < idx.size() && r < static_cast<size_t>(k); ++r) {
        const size_t i = idx[r];
        ranking.top.push_back({forms[i], radii[i], graphs[i].max_degree()});
    }
    const size_t last = idx.back();
    ranking.minimum = {forms[last], radii[last], graphs[last].max_degree()};
    return ranking;
}

}  // namespace agspec
