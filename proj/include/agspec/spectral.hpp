#ifndef AGSPEC_SPECTRAL_HPP
#define AGSPEC_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "agspec/symmatrix.hpp"

namespace agspec {

struct Spectrum {
    // All eigenvalues, sorted descending (stable for ties).
    std::vector<double> eigenvalues;
    // Unit eigenvector of the largest eigenvalue with all entries positive;
    // present when the input is nonnegative and irreducible.
    std::optional<std::vector<double>> perron;
};

// Cyclic Jacobi rotations; stops when the off-diagonal norm drops below
// 1e-14 * ||M||_F, at most 100 sweeps.
Spectrum full_spectrum(const SymMatrix& m);

// Independent route to the largest eigenvalue: power iteration on M + I
// (the shift keeps bipartite-type spectra, where -rho is also an
// eigenvalue, from stalling the Rayleigh quotient). Start vector is the
// normalized all-ones vector; stops when the Rayleigh quotient changes by
// less than 1e-12, at most 1e6 iterations.
// Requires nonnegative entries and an irreducible (connected) pattern.
double spectral_radius(const SymMatrix& m);

// Monic coefficients of det(rho*I - M), highest power first, via the
// Faddeev-LeVerrier recurrence. Requires n <= 64.
std::vector<double> char_poly(const SymMatrix& m);

}  // namespace agspec

#endif
