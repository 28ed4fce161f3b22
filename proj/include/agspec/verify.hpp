#ifndef AGSPEC_VERIFY_HPP
#define AGSPEC_VERIFY_HPP

#include <string>
#include <vector>

#include "agspec/canonical.hpp"
#include "agspec/graph.hpp"
#include "agspec/report.hpp"

namespace agspec {

struct VerifyOptions {
    int n_max = 0;          // 0 = suite default
    std::string data_dir;   // golden CSV directory; "" = env / built-in
    int threads = 0;        // 0 = min(hardware, AGSPEC_THREADS)
};

// AG spectral radius of a graph (largest eigenvalue of its AG matrix).
double ag_spectral_radius(const Graph& g);

// Compare computed AG radii against the bundled reference tables.
//   1: named families G1..G3 per order
//   2: the twelve max-degree n-3 classes per order (sorted multisets)
//   3,4,5: all unicyclic classes of order 5,6,7 (sorted multisets)
VerificationReport reproduce_table(int table_id, const VerifyOptions& opts = {});

// Extremal classification at order n: the cycle is the unique minimum and
// the named families are the unique top four in the branch order. Full
// enumeration for n <= 10; named-value orderings and bracket/threshold
// chains beyond.
VerificationReport verify_theorem(int n, const VerifyOptions& opts = {});

// (n-1)/2 < rho_ag(S_n+e) < n/2 for every n in [n_min, n_max] with n >= 8;
// smaller orders are reported as skipped.
VerificationReport verify_lemma5(int n_min, int n_max);

// Strict chains among rho_ag(G1..G3) and the per-branch constants.
VerificationReport verify_lemma6(int n_min, int n_max);

// Row-sum bound, threshold domination, the general upper bound with its
// star equality case, and the sign conditions backing the root brackets.
VerificationReport verify_bounds(const VerifyOptions& opts = {});

struct RankedGraph {
    CanonicalForm form;
    double rho = 0.0;
    int max_degree = 0;
};

// Top-k bicyclic graphs by AG spectral radius, plus the identified
// minimum. Exploratory: no pass/fail judgement.
struct ExtremalRanking {
    int order = 0;
    int class_count = 0;
    std::vector<RankedGraph> top;
    RankedGraph minimum;
};

ExtremalRanking explore_bicyclic(int n, int k, const VerifyOptions& opts = {});

}  // namespace agspec

#endif
