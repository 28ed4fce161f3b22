#include "agspec/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "agspec/canonical.hpp"

namespace agspec {

namespace {

using ClassMap = std::map<std::string, Graph>;  // canonical bytes -> representative

void insert_class(ClassMap& classes, const Graph& g) {
    Graph cg = canonical_graph(g);
    std::string key = to_graph6(cg);
    classes.emplace(std::move(key), std::move(cg));
}

// All unicyclic classes of order n whose unique cycle has length c:
// start from C_c and attach pendant vertices one at a time, deduplicating
// after every growth step.
ClassMap grow_from_cycle(int cycle_len, int n) {
    ClassMap cur;
    insert_class(cur, build_family(NamedFamily::Cycle, cycle_len));
    for (int k = cycle_len; k < n; ++k) {
        ClassMap next;
        for (const auto& [key, g] : cur) {
            std::vector<std::pair<int, int>> edges = g.edges();
            edges.emplace_back(0, k);  // placeholder, rewritten below
            for (int v = 0; v < k; ++v) {
                edges.back() = {v, k};
                insert_class(next, Graph(k + 1, edges));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// Unicyclic graphs with a vertex of degree delta >= n-3. The hub fixes all
// but t = n-1-delta vertices; the remaining t+1 non-hub edges touch at most
// 2(t+1) of the interchangeable hub neighbors, so a bounded pattern search
// is exhaustive up to isomorphism.
ClassMap high_degree_classes(int n, int delta) {
    const int t = n - 1 - delta;       // vertices not adjacent to the hub
    const int extra = n - delta;       // edges not incident to the hub
    const int na = std::min(delta, 2 * extra);

    std::vector<int> support;          // hub-neighbor representatives, then the rest
    for (int i = 1; i <= na; ++i) support.push_back(i);
    for (int i = 0; i < t; ++i) support.push_back(1 + delta + i);

    std::vector<std::pair<int, int>> pool;
    for (size_t a = 0; a < support.size(); ++a)
        for (size_t b = a + 1; b < support.size(); ++b)
            pool.emplace_back(support[a], support[b]);

    std::vector<std::pair<int, int>> base;
    for (int i = 1; i <= delta; ++i) base.emplace_back(0, i);

    ClassMap classes;
    const int p = static_cast<int>(pool.size());
    std::vector<int> pick(extra);
    // lexicographic combinations of `extra` pool edges
    auto emit = [&](const std::vector<int>& sel) {
        std::vector<std::pair<int, int>> edges = base;
        for (int idx : sel) edges.push_back(pool[idx]);
        Graph g(n, std::move(edges));
        if (!g.is_connected()) return;
        if (g.max_degree() != delta) return;
        insert_class(classes, g);
    };
    // simple iterative combination enumeration
    for (int i = 0; i < extra; ++i) pick[i] = i;
    if (extra > p) return classes;
    while (true) {
        emit(pick);
        int i = extra - 1;
        while (i >= 0 && pick[i] == p - extra + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
    return classes;
}

}  // namespace

std::vector<Graph> enumerate_unicyclic(int n) {
    if (n < 3) throw std::invalid_argument("enumerate_unicyclic: n must be >= 3");
    if (n > kMaxUnicyclicOrder)
        throw std::out_of_range("enumerate_unicyclic: order limit " +
                                std::to_string(kMaxUnicyclicOrder) + " exceeded");
    std::vector<Graph> out;
    for (int c = 3; c <= n; ++c) {
        ClassMap classes = grow_from_cycle(c, n);
        for (auto& [key, g] : classes) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> enumerate_unicyclic_max_degree(int n, int delta) {
    if (n < 3) throw std::invalid_argument("enumerate_unicyclic_max_degree: n must be >= 3");
    if (delta < 2 || delta > n - 1)
        throw std::invalid_argument("enumerate_unicyclic_max_degree: need 2 <= delta <= n-1");
    if (delta >= n - 3) {
        if (n > kMaxHighDegreeOrder)
            throw std::out_of_range("enumerate_unicyclic_max_degree: order limit " +
                                    std::to_string(kMaxHighDegreeOrder) + " exceeded");
        ClassMap classes = high_degree_classes(n, delta);
        std::vector<Graph> out;
        for (auto& [key, g] : classes) out.push_back(std::move(g));
        return out;
    }
    std::vector<Graph> all = enumerate_unicyclic(n);
    std::vector<Graph> out;
    for (auto& g : all)
        if (g.max_degree() == delta) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> enumerate_bicyclic(int n) {
    if (n < 4) throw std::invalid_argument("enumerate_bicyclic: n must be >= 4");
    if (n > kMaxBicyclicOrder)
        throw std::out_of_range("enumerate_bicyclic: order limit " +
                                std::to_string(kMaxBicyclicOrder) + " exceeded");
    // Every connected bicyclic graph is a unicyclic graph plus one edge:
    // deleting any edge of a cycle keeps it connected with m = n.
    ClassMap classes;
    for (const Graph& g : enumerate_unicyclic(n)) {
        std::vector<std::pair<int, int>> edges = g.edges();
        edges.emplace_back(0, 0);  // placeholder
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                edges.back() = {u, v};
                insert_class(classes, Graph(n, edges));
            }
    }
    std::vector<Graph> out;
    for (auto& [key, g] : classes) out.push_back(std::move(g));
    return out;
}

}  // namespace agspec
