// Test-only reference implementations, kept deliberately naive and
// independent of the library's production paths.
#ifndef AGSPEC_TESTS_ORACLES_HPP
#define AGSPEC_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "agspec/canonical.hpp"
#include "agspec/graph.hpp"

namespace oracles {

// Every connected graph on n labeled vertices with exactly m edges, one
// representative per isomorphism class: plain subset enumeration over all
// C(n*(n-1)/2, m) edge sets. Exponential; n <= 7 in practice.
inline std::vector<agspec::Graph> brute_force_connected_classes(int n, int m) {
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
    const int total = static_cast<int>(all_edges.size());

    std::set<std::string> seen;
    std::vector<agspec::Graph> out;
    std::vector<int> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    if (m > total) return out;
    while (true) {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(m);
        for (int i : pick) edges.push_back(all_edges[i]);
        agspec::Graph g(n, std::move(edges));
        if (g.is_connected()) {
            agspec::Graph cg = agspec::canonical_graph(g);
            if (seen.insert(agspec::to_graph6(cg)).second) out.push_back(std::move(cg));
        }
        int i = m - 1;
        while (i >= 0 && pick[i] == total - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

// Certificate by trying every vertex permutation; ground truth for the
// backtracking search. n <= 8.
inline std::string permutation_canonical_oracle(const agspec::Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s = agspec::to_graph6(g.relabeled(perm));
        if (best.empty() || s > best) best = std::move(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Deterministic xorshift; keeps the tests reproducible without <random>
// engine/library variation concerns.
struct Rng {
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    unsigned long long next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int uniform(int bound) { return static_cast<int>(next() % static_cast<unsigned>(bound)); }
};

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.uniform(i + 1)]);
    return p;
}

}  // namespace oracles

#endif
