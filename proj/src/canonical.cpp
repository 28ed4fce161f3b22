#include "agspec/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace agspec {

namespace {

// Backtracking search for the vertex order whose adjacency bit-string
// (upper triangle, column by column, earlier positions more significant)
// is lexicographically maximal. The string is handled as one segment per
// level: segment k holds the adjacency bits of the vertex placed at
// position k towards positions 0..k-1, most significant bit first.
class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : n_(g.order()) {
        if (n_ > 64) throw std::invalid_argument("canonical_graph: order > 64 unsupported");
        adj_.assign(n_, 0);
        for (auto [u, v] : g.edges()) {
            adj_[u] |= std::uint64_t{1} << v;
            adj_[v] |= std::uint64_t{1} << u;
        }
    }

    std::vector<int> run() {
        order_.assign(n_, -1);
        used_ = 0;
        best_.clear();
        best_order_.clear();
        for (int v = 0; v < n_; ++v) {
            if (is_twin_of_earlier_candidate(v)) continue;
            place(0, v);
        }
        return best_order_;
    }

private:
    std::uint64_t segment(int v, int level) const {
        std::uint64_t seg = 0;
        for (int j = 0; j < level; ++j)
            seg = (seg << 1) | ((adj_[v] >> order_[j]) & 1u);
        return seg;
    }

    // u and v are interchangeable when their neighborhoods agree outside
    // the pair itself; exploring one of them suffices.
    bool twins(int u, int v) const {
        std::uint64_t drop = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        return (adj_[u] & ~drop) == (adj_[v] & ~drop);
    }

    bool is_twin_of_earlier_candidate(int v) const {
        for (int u = 0; u < v; ++u)
            if (!(used_ & (std::uint64_t{1} << u)) && twins(u, v)) return true;
        return false;
    }

    void place(int level, int v) {
        order_[level] = v;
        used_ |= std::uint64_t{1} << v;
        descend(level + 1);
        used_ &= ~(std::uint64_t{1} << v);
        order_[level] = -1;
    }

    void descend(int level) {
        if (level == n_) {
            // Reaching a leaf means the path segments equal best_; record
            // the first such order only.
            if (best_order_.empty()) best_order_ = order_;
            return;
        }
        // Candidates sorted by segment value, largest first.
        std::vector<std::pair<std::uint64_t, int>> cand;
        cand.reserve(n_ - level);
        for (int v = 0; v < n_; ++v) {
            if (used_ & (std::uint64_t{1} << v)) continue;
            if (is_twin_of_earlier_candidate(v)) continue;
            cand.emplace_back(segment(v, level), v);
        }
        std::sort(cand.begin(), cand.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first : a.second < b.second;
                  });
        for (auto [seg, v] : cand) {
            const bool have = static_cast<int>(best_.size()) > level - 1;
            if (have) {
                if (seg < best_[level - 1]) break;  // rest are smaller too
                if (seg > best_[level - 1]) {
                    // Strictly better prefix: everything recorded from here
                    // down is stale.
                    best_.resize(level - 1);
                    best_.push_back(seg);
                    best_order_.clear();
                }
            } else {
                best_.push_back(seg);
                best_order_.clear();
            }
            place(level, v);
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> order_;
    std::uint64_t used_ = 0;
    std::vector<std::uint64_t> best_;   // segment values of the best known string
    std::vector<int> best_order_;       // order achieving best_, once complete
};

}  // namespace

Graph canonical_graph(const Graph& g) {
    if (g.order() == 1) return g;
    CanonSearch search(g);
    std::vector<int> order = search.run();
    std::vector<int> new_label(g.order());
    for (int pos = 0; pos < g.order(); ++pos) new_label[order[pos]] = pos;
    return g.relabeled(new_label);
}

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{to_graph6(canonical_graph(g))};
}

}  // namespace agspec
