#include "agspec/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <stdexcept>

namespace agspec {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("Graph: order must be >= 1");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: vertex out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: parallel edge");
    edges_ = std::move(edges);

    degrees_.assign(n_, 0);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        ++degrees_[u];
        ++degrees_[v];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

int Graph::degree(int v) const {
    check_vertex(v);
    return degrees_[v];
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

int Graph::max_degree() const {
    if (n_ == 0) return 0;
    return *std::max_element(degrees_.begin(), degrees_.end());
}

int Graph::girth() const {
    // BFS from every vertex; the first non-tree edge seen closes a shortest
    // cycle through the root.
    int best = 0;
    std::vector<int> dist(n_), parent(n_);
    for (int root = 0; root < n_; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        q.push(root);
        dist[root] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj_[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

Graph Graph::relabeled(const std::vector<int>& new_label) const {
    if (static_cast<int>(new_label.size()) != n_)
        throw std::invalid_argument("relabeled: permutation size mismatch");
    std::vector<char> hit(n_, 0);
    for (int x : new_label) {
        if (x < 0 || x >= n_ || hit[x])
            throw std::invalid_argument("relabeled: not a permutation");
        hit[x] = 1;
    }
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(edges_.size());
    for (auto [u, v] : edges_) mapped.emplace_back(new_label[u], new_label[v]);
    return Graph(n_, std::move(mapped));
}

Graph build_family(NamedFamily family, int n) {
    const int min_n = (family == NamedFamily::Cycle || family == NamedFamily::StarPlusEdge) ? 3 : 5;
    if (n < min_n)
        throw std::invalid_argument(std::string("build_family: ") + family_name(family) +
                                    " requires n >= " + std::to_string(min_n));
    std::vector<std::pair<int, int>> e;
    switch (family) {
        case NamedFamily::Cycle:
            for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
            break;
        case NamedFamily::StarPlusEdge:
            for (int i = 1; i < n; ++i) e.emplace_back(0, i);
            e.emplace_back(1, 2);
            break;
        case NamedFamily::G1:
            e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
            for (int i = 4; i < n; ++i) e.emplace_back(0, i);
            break;
        case NamedFamily::G2:
            for (int i = 1; i < n - 1; ++i) e.emplace_back(0, i);
            e.emplace_back(1, 2);
            e.emplace_back(1, n - 1);
            break;
        case NamedFamily::G3:
            for (int i = 1; i < n - 1; ++i) e.emplace_back(0, i);
            e.emplace_back(1, 2);
            e.emplace_back(3, n - 1);
            break;
    }
    return Graph(n, std::move(e));
}

const char* family_name(NamedFamily family) {
    switch (family) {
        case NamedFamily::Cycle: return "cycle";
        case NamedFamily::StarPlusEdge: return "star-plus-edge";
        case NamedFamily::G1: return "g1";
        case NamedFamily::G2: return "g2";
        case NamedFamily::G3: return "g3";
    }
    return "?";
}

std::optional<NamedFamily> family_from_name(std::string_view name) {
    if (name == "cycle") return NamedFamily::Cycle;
    if (name == "star-plus-edge") return NamedFamily::StarPlusEdge;
    if (name == "g1") return NamedFamily::G1;
    if (name == "g2") return NamedFamily::G2;
    if (name == "g3") return NamedFamily::G3;
    return std::nullopt;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("to_graph6: order too large");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw std::invalid_argument("from_graph6: truncated input");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("from_graph6: invalid character");
        return c - 63;
    };
    int n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    if (n < 1) throw std::invalid_argument("from_graph6: empty graph");
    std::vector<std::pair<int, int>> edges;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) edges.emplace_back(i, j);
            --nbits;
        }
    if (pos != text.size()) throw std::invalid_argument("from_graph6: trailing bytes");
    return Graph(n, std::move(edges));
}

void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
    int n, m;
    if (!(is >> n >> m)) throw std::invalid_argument("read_edge_list: bad header");
    if (m < 0) throw std::invalid_argument("read_edge_list: negative edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int k = 0; k < m; ++k) {
        int u, v;
        if (!(is >> u >> v)) throw std::invalid_argument("read_edge_list: truncated edge list");
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

}  // namespace agspec
