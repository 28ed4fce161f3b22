#ifndef AGSPEC_GRAPH_HPP
#define AGSPEC_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace agspec {

// Undirected simple graph on vertices 0..n-1. Edges are normalized to
// (min,max) pairs and kept sorted; the degree cache stays in sync.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;

    bool is_connected() const;
    int max_degree() const;
    // Length of a shortest cycle, or 0 if the graph is acyclic.
    int girth() const;

    // new_label[old vertex] = new vertex; must be a permutation of 0..n-1.
    Graph relabeled(const std::vector<int>& new_label) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> adj_;
};

enum class NamedFamily { Cycle, StarPlusEdge, G1, G2, G3 };

// Fixed labelings so golden files are reproducible; the hub is vertex 0.
//   Cycle        : 0-1-...-(n-1)-0, n >= 3
//   StarPlusEdge : hub 0 joined to all, plus edge (1,2), n >= 3
//   G1           : quadrangle 0-1-2-3 plus n-4 pendants at 0, n >= 5
//   G2           : StarPlusEdge on n-1 vertices plus pendant at 1, n >= 5
//   G3           : StarPlusEdge on n-1 vertices plus pendant at 3, n >= 5
Graph build_family(NamedFamily family, int n);

const char* family_name(NamedFamily family);
std::optional<NamedFamily> family_from_name(std::string_view name);

// graph6: the standard 6-bit ASCII encoding of the upper triangle.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Plain text edge list: "n m" header followed by one "u v" line per edge.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);

}  // namespace agspec

#endif
