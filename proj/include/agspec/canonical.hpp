#ifndef AGSPEC_CANONICAL_HPP
#define AGSPEC_CANONICAL_HPP

#include <compare>
#include <string>

#include "agspec/graph.hpp"

namespace agspec {

// Exact isomorphism certificate: the graph6 bytes of the canonical
// relabeling. Equal bytes if and only if the graphs are isomorphic.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

// Relabeling that maximizes the adjacency bit-string (upper triangle read
// column by column), found by backtracking with prefix pruning and twin
// collapsing. Exact; requires n <= 64.
Graph canonical_graph(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

}  // namespace agspec

#endif
