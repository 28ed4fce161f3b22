#include "agspec/weights.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace agspec {

double edge_weight(WeightScheme scheme, int dx, int dy) {
    if (dx < 1 || dy < 1) throw std::domain_error("edge_weight: degrees must be >= 1");
    const double x = dx, y = dy;
    switch (scheme) {
        case WeightScheme::Adjacency: return 1.0;
        case WeightScheme::AG: return (x + y) / (2.0 * std::sqrt(x * y));
        case WeightScheme::Randic: return 1.0 / std::sqrt(x * y);
        case WeightScheme::ABC: return std::sqrt((x + y - 2.0) / (x * y));
    }
    throw std::invalid_argument("edge_weight: unknown scheme");
}

SymMatrix weighted_adjacency(const Graph& g, WeightScheme scheme) {
    if (g.order() < 2) throw std::invalid_argument("weighted_adjacency: order must be >= 2");
    if (!g.is_connected())
        throw std::invalid_argument("weighted_adjacency: graph must be connected");
    SymMatrix m(g.order());
    for (auto [u, v] : g.edges())
        m.set(u, v, edge_weight(scheme, g.degree(u), g.degree(v)));
    return m;
}

namespace {

double edge_sum(const Graph& g, WeightScheme scheme) {
    double s = 0.0;
    for (auto [u, v] : g.edges()) s += edge_weight(scheme, g.degree(u), g.degree(v));
    return s;
}

}  // namespace

double ag_index(const Graph& g) { return edge_sum(g, WeightScheme::AG); }
double randic_index(const Graph& g) { return edge_sum(g, WeightScheme::Randic); }
double abc_index(const Graph& g) { return edge_sum(g, WeightScheme::ABC); }

double first_zagreb(const Graph& g) {
    double s = 0.0;
    for (auto [u, v] : g.edges()) s += g.degree(u) + g.degree(v);
    return s;
}

void write_matrix_csv(std::ostream& os, const SymMatrix& m) {
    char buf[64];
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            if (j) os << ',';
            os << buf;
        }
        os << '\n';
    }
}

std::optional<WeightScheme> scheme_from_name(std::string_view name) {
    if (name == "adj" || name == "adjacency") return WeightScheme::Adjacency;
    if (name == "ag") return WeightScheme::AG;
    if (name == "randic") return WeightScheme::Randic;
    if (name == "abc") return WeightScheme::ABC;
    return std::nullopt;
}

const char* scheme_name(WeightScheme scheme) {
    switch (scheme) {
        case WeightScheme::Adjacency: return "adj";
        case WeightScheme::AG: return "ag";
        case WeightScheme::Randic: return "randic";
        case WeightScheme::ABC: return "abc";
    }
    return "?";
}

}  // namespace agspec
