#include "agspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace agspec {

namespace {

bool pattern_connected(const SymMatrix& m) {
    const int n = m.size();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (!seen[w] && m(v, w) != 0.0) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

bool nonnegative(const SymMatrix& m) {
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            if (m(i, j) < 0.0) return false;
    return true;
}

double offdiag_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
}

}  // namespace

Spectrum full_spectrum(const SymMatrix& m) {
    const int n = m.size();
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    std::vector<double> vec(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) vec[i * n + i] = 1.0;

    const double thresh = 1e-14 * m.frobenius_norm();
    bool converged = offdiag_norm(a, n) <= thresh;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t =
                    (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = vec[k * n + p], vkq = vec[k * n + q];
                    vec[k * n + p] = c * vkp - s * vkq;
                    vec[k * n + q] = s * vkp + c * vkq;
                }
            }
        converged = offdiag_norm(a, n) <= thresh;
    }
    if (!converged) throw std::runtime_error("full_spectrum: Jacobi sweep budget exceeded");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a[i * n + i] > a[j * n + j]; });

    Spectrum spec;
    spec.eigenvalues.reserve(n);
    for (int i : order) spec.eigenvalues.push_back(a[i * n + i]);

    if (nonnegative(m) && pattern_connected(m)) {
        const int top = order[0];
        std::vector<double> v(n);
        for (int k = 0; k < n; ++k) v[k] = vec[k * n + top];
        double norm = 0.0;
        int imax = 0;
        for (int k = 0; k < n; ++k) {
            norm += v[k] * v[k];
            if (std::abs(v[k]) > std::abs(v[imax])) imax = k;
        }
        norm = std::sqrt(norm);
        const double sign = v[imax] < 0 ? -1.0 : 1.0;
        bool positive = true;
        for (double& x : v) {
            x *= sign / norm;
            if (x <= 0.0) positive = false;
        }
        if (positive) spec.perron = std::move(v);
    }
    return spec;
}

double spectral_radius(const SymMatrix& m) {
    const int n = m.size();
    if (!nonnegative(m)) throw std::domain_error("spectral_radius: negative entries");
    if (!pattern_connected(m))
        throw std::runtime_error("spectral_radius: matrix is reducible (disconnected pattern)");

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double prev_rq = 0.0;
    bool have_prev = false;
    for (long iter = 0; iter < 1000000; ++iter) {
        // y = (M + I) x
        for (int i = 0; i < n; ++i) {
            double s = x[i];
            for (int j = 0; j < n; ++j) s += m(i, j) * x[j];
            y[i] = s;
        }
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        // Rayleigh quotient of the original matrix
        double rq = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += m(i, j) * x[j];
            rq += x[i] * s;
        }
        if (have_prev && std::abs(rq - prev_rq) <= 1e-12) return rq;
        prev_rq = rq;
        have_prev = true;
    }
    throw std::runtime_error("spectral_radius: iteration budget exceeded");
}

std::vector<double> char_poly(const SymMatrix& m) {
    const int n = m.size();
    if (n > 64) throw std::invalid_argument("char_poly: n > 64 unsupported");
    std::vector<double> coeffs(n + 1);
    coeffs[0] = 1.0;
    // Faddeev-LeVerrier: B_0 = I; C = M B_{k-1}; c_k = -tr(C)/k; B_k = C + c_k I.
    std::vector<double> b(static_cast<size_t>(n) * n, 0.0), c(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) b[i * n + i] = 1.0;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int l = 0; l < n; ++l) s += m(i, l) * b[l * n + j];
                c[i * n + j] = s;
            }
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += c[i * n + i];
        coeffs[k] = -tr / k;
        b = c;
        for (int i = 0; i < n; ++i) b[i * n + i] += coeffs[k];
    }
    return coeffs;
}

}  // namespace agspec
