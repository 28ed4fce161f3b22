#ifndef AGSPEC_WEIGHTS_HPP
#define AGSPEC_WEIGHTS_HPP

#include <iosfwd>
#include <optional>
#include <string_view>

#include "agspec/graph.hpp"
#include "agspec/symmatrix.hpp"

namespace agspec {

enum class WeightScheme { Adjacency, AG, Randic, ABC };

// Weight of an edge whose endpoints have degrees dx, dy (both >= 1):
//   Adjacency -> 1
//   AG        -> (dx+dy) / (2*sqrt(dx*dy))
//   Randic    -> 1 / sqrt(dx*dy)
//   ABC       -> sqrt((dx+dy-2) / (dx*dy))
double edge_weight(WeightScheme scheme, int dx, int dy);

// n x n matrix with entry (i,j) = edge_weight(scheme, d_i, d_j) on edges,
// 0 elsewhere. Requires a connected graph on n >= 2 vertices.
SymMatrix weighted_adjacency(const Graph& g, WeightScheme scheme);

// Degree-based indices: sums of the per-edge quantity over all edges.
double ag_index(const Graph& g);
double randic_index(const Graph& g);
double abc_index(const Graph& g);
double first_zagreb(const Graph& g);  // sum of d_u + d_v over edges

// Dense CSV dump at full precision, one matrix row per line.
void write_matrix_csv(std::ostream& os, const SymMatrix& m);

std::optional<WeightScheme> scheme_from_name(std::string_view name);
const char* scheme_name(WeightScheme scheme);

}  // namespace agspec

#endif
