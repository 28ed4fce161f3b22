#ifndef AGSPEC_CLOSED_FORM_HPP
#define AGSPEC_CLOSED_FORM_HPP

#include <optional>

#include "agspec/graph.hpp"

namespace agspec {

// Closed-form characteristic polynomials of the AG matrices of the named
// families, and the low-degree factors carrying their largest roots.
// PhiX = full monic polynomial of the order-n graph; the *Factor/T1 forms
// omit the rho^k prefactors and leading rational constants.
enum class PolyFamily {
    Phi1,             // G1, = rho^(n-4)/(8(n-2)) * G1Factor
    Phi2,             // G2, = rho^(n-4)/(4(n-2)) * G2Factor
    Phi3,             // G3, = rho^(n-6)/(8(n-2)) * G3Factor
    PhiStarPlusEdge,  // S_n+e, = rho^(n-4)*(rho+1) * T1
    G1Factor,         // quartic
    G2Factor,         // quartic
    G3Factor,         // sextic
    T1,               // cubic
};

// Evaluate at rho for order n (n >= 5).
double eval_poly(PolyFamily family, double rho, int n);

// d/d rho of the factor polynomials (G1Factor, G2Factor, G3Factor, T1).
double eval_factor_derivative(PolyFamily family, double rho, int n);

// k-th partial derivative of G3Factor with respect to rho, 1 <= k <= 4.
double eval_g3_derivative(int k, double rho, int n);

// Largest real root of a factor polynomial (G1Factor, G2Factor, G3Factor,
// T1) for n >= 8: bisection on a bracket known to isolate it, then Newton
// polish. Equals the AG spectral radius of the matching family graph.
double largest_root(PolyFamily family, int n);

// Row-sum machinery for the weighted adjacency acting on X = (sqrt(d_v)):
// row_image is the v-th entry of A_ag(G) X, lemma4_bound the upper bound
// (d_v^2 + 2m - n + 1) / (2 sqrt(d_v)).
double row_image(const Graph& g, int v);
double lemma4_bound(const Graph& g, int v);

// Piecewise strict upper bound on the AG spectral radius of a unicyclic
// graph of order n >= 8 with maximum degree delta; absent when (n, delta)
// falls outside the three covered cases.
std::optional<double> lemma7_threshold(int n, int delta);

// (1/2)(sqrt(n-1) + 1/sqrt(n-1)) * sqrt(2m - n + 1); attained exactly by
// the star S_n.
double zheng_upper_bound(int n, int m);

}  // namespace agspec

#endif
