#ifndef AGSPEC_ENUMERATE_HPP
#define AGSPEC_ENUMERATE_HPP

#include <vector>

#include "agspec/graph.hpp"

namespace agspec {

// Supported orders. The general unicyclic/bicyclic generators grow a cycle
// by pendant vertices with per-level canonical deduplication; the cost is
// the total number of isomorphism classes, which explodes past these
// limits. High maximum degree (delta >= n-3) has a direct construction
// that stays cheap for much larger n.
inline constexpr int kMaxUnicyclicOrder = 12;
inline constexpr int kMaxBicyclicOrder = 10;
inline constexpr int kMaxHighDegreeOrder = 32;

// One representative per isomorphism class of connected unicyclic graphs
// (m = n), sorted by cycle length then canonical form. 3 <= n <= 12.
std::vector<Graph> enumerate_unicyclic(int n);

// The unicyclic classes whose maximum degree equals delta exactly.
// delta >= n-3 works up to n = 32; smaller delta falls back to filtered
// full enumeration and needs n <= 12.
std::vector<Graph> enumerate_unicyclic_max_degree(int n, int delta);

// One representative per class of connected bicyclic graphs (m = n+1),
// obtained as unicyclic graphs plus one extra edge. 4 <= n <= 10.
std::vector<Graph> enumerate_bicyclic(int n);

}  // namespace agspec

#endif
