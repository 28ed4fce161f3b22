#include "agspec/closed_form.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "agspec/weights.hpp"

namespace agspec {

namespace {

// Factor polynomial evaluation. When |scale| is requested it receives the
// sum of the absolute term values, the natural magnitude against which a
// residual should be judged.
double eval_factor(PolyFamily family, double rho, double n, double* scale = nullptr) {
    double terms[8];
    int cnt = 0;
    switch (family) {
        case PolyFamily::G1Factor:
            terms[cnt++] = 8 * (n - 2) * rho * rho * rho * rho;
            terms[cnt++] = -(2 * n * n * n - 10 * n * n + 34 * n - 40) * rho * rho;
            terms[cnt++] = 4 * (n - 4) * (n - 1) * (n - 1);
            break;
        case PolyFamily::G2Factor:
            terms[cnt++] = 4 * (n - 2) * rho * rho * rho * rho;
            terms[cnt++] = -(6 * n * n * n - 31 * n * n + 115 * n - 136) / 6.0 * rho * rho;
            terms[cnt++] = -(5 * n * n + 5 * n) / 6.0 * rho;
            terms[cnt++] = 2 * n * n / 3.0;
            terms[cnt++] = 19 * (n - 4) * (n - 1) * (n - 1) / 8.0;
            break;
        case PolyFamily::G3Factor: {
            const double r2 = rho * rho, r3 = r2 * rho;
            terms[cnt++] = 8 * (n - 2) * r3 * r3;
            terms[cnt++] = -(2 * n * n * n - 11 * n * n + 39 * n - 44) * r2 * r2;
            terms[cnt++] = -2 * n * n * r3;
            terms[cnt++] =
                (13 * n * n / 4.0 + 9 * (n - 2) + 17.0 / 4.0 * (n - 5) * (n - 1) * (n - 1)) * r2;
            terms[cnt++] = 9.0 / 4.0 * n * n * rho;
            terms[cnt++] = -9.0 / 4.0 * (n - 5) * (n - 1) * (n - 1);
            break;
        }
        case PolyFamily::T1:
            terms[cnt++] = rho * rho * rho;
            terms[cnt++] = -rho * rho;
            terms[cnt++] = -(n * n * n - 2 * n * n + 2 * n + 1) / (4 * (n - 1)) * rho;
            terms[cnt++] = (n - 3) * n * n / (4 * (n - 1));
            break;
        default:
            throw std::invalid_argument("eval_factor: not a factor family");
    }
    double value = 0.0, mag = 0.0;
    for (int i = 0; i < cnt; ++i) {
        value += terms[i];
        mag += std::abs(terms[i]);
    }
    if (scale) *scale = mag;
    return value;
}

void require_order(int n, int min_n, const char* who) {
    if (n < min_n)
        throw std::domain_error(std::string(who) + ": n must be >= " + std::to_string(min_n));
}

}  // namespace

double eval_poly(PolyFamily family, double rho, int n) {
    // The full polynomials carry rho^(n-4)/rho^(n-6) prefactors and need
    // n >= 5; the bare factors are evaluated over wider ranges by the sign
    // checks and only need the denominators to stay away from zero.
    const bool full = family == PolyFamily::Phi1 || family == PolyFamily::Phi2 ||
                      family == PolyFamily::Phi3 || family == PolyFamily::PhiStarPlusEdge;
    require_order(n, full ? 5 : 2, "eval_poly");
    if (!std::isfinite(rho)) throw std::domain_error("eval_poly: rho must be finite");
    const double nn = n;
    switch (family) {
        case PolyFamily::Phi1:
            return std::pow(rho, n - 4) / (8 * (nn - 2)) * eval_factor(PolyFamily::G1Factor, rho, nn);
        case PolyFamily::Phi2:
            return std::pow(rho, n - 4) / (4 * (nn - 2)) * eval_factor(PolyFamily::G2Factor, rho, nn);
        case PolyFamily::Phi3:
            if (n == 5) {
                // The constant term of the sextic vanishes at n = 5, so the
                // rho^(n-6) prefactor cancels: divide the factor by rho.
                const double r2 = rho * rho, r3 = r2 * rho;
                const double c4 = 2 * nn * nn * nn - 11 * nn * nn + 39 * nn - 44;
                const double c2 = 13 * nn * nn / 4.0 + 9 * (nn - 2) +
                                  17.0 / 4.0 * (nn - 5) * (nn - 1) * (nn - 1);
                return (8 * (nn - 2) * r2 * r3 - c4 * r3 - 2 * nn * nn * r2 + c2 * rho +
                        9.0 / 4.0 * nn * nn) /
                       (8 * (nn - 2));
            }
            return std::pow(rho, n - 6) / (8 * (nn - 2)) * eval_factor(PolyFamily::G3Factor, rho, nn);
        case PolyFamily::PhiStarPlusEdge:
            return std::pow(rho, n - 4) * (rho + 1) * eval_factor(PolyFamily::T1, rho, nn);
        default:
            return eval_factor(family, rho, nn);
    }
}

double eval_factor_derivative(PolyFamily family, double rho, int n) {
    require_order(n, 2, "eval_factor_derivative");
    const double nn = n;
    switch (family) {
        case PolyFamily::G1Factor:
            return 32 * (nn - 2) * rho * rho * rho -
                   2 * (2 * nn * nn * nn - 10 * nn * nn + 34 * nn - 40) * rho;
        case PolyFamily::G2Factor:
            return 16 * (nn - 2) * rho * rho * rho -
                   (6 * nn * nn * nn - 31 * nn * nn + 115 * nn - 136) / 3.0 * rho -
                   (5 * nn * nn + 5 * nn) / 6.0;
        case PolyFamily::G3Factor:
            return eval_g3_derivative(1, rho, n);
        case PolyFamily::T1:
            return 3 * rho * rho - 2 * rho - (nn * nn * nn - 2 * nn * nn + 2 * nn + 1) / (4 * (nn - 1));
        default:
            throw std::invalid_argument("eval_factor_derivative: not a factor family");
    }
}

double eval_g3_derivative(int k, double rho, int n) {
    if (k < 1 || k > 4) throw std::domain_error("eval_g3_derivative: k must be in 1..4");
    const double nn = n;
    const double c4 = 2 * nn * nn * nn - 11 * nn * nn + 39 * nn - 44;
    const double c2 =
        13 * nn * nn / 4.0 + 9 * (nn - 2) + 17.0 / 4.0 * (nn - 5) * (nn - 1) * (nn - 1);
    const double r2 = rho * rho;
    switch (k) {
        case 1:
            return 48 * (nn - 2) * r2 * r2 * rho - 4 * c4 * r2 * rho - 6 * nn * nn * r2 +
                   2 * c2 * rho + 9.0 / 4.0 * nn * nn;
        case 2:
            return 240 * (nn - 2) * r2 * r2 - 12 * c4 * r2 - 12 * nn * nn * rho + 2 * c2;
        case 3:
            return 960 * (nn - 2) * r2 * rho - 24 * c4 * rho - 12 * nn * nn;
        default:
            return 2880 * (nn - 2) * r2 - 24 * c4;
    }
}

double largest_root(PolyFamily family, int n) {
    if (family != PolyFamily::G1Factor && family != PolyFamily::G2Factor &&
        family != PolyFamily::G3Factor && family != PolyFamily::T1)
        throw std::invalid_argument("largest_root: factor families only");
    require_order(n, 8, "largest_root");
    const double nn = n;

    double lo, hi;
    switch (family) {
        case PolyFamily::G1Factor:
            lo = (nn - 1.5) / 2;
            hi = (nn - 1) / 2;
            break;
        case PolyFamily::G2Factor:
            if (n >= 22) {
                lo = (nn - 1.6) / 2;
                hi = (nn - 1.5) / 2;
            } else {
                lo = (nn - 1.75) / 2;
                hi = (nn - 1) / 2;
            }
            break;
        case PolyFamily::G3Factor:
            if (n >= 17) {
                lo = (nn - 1.75) / 2;
                hi = (nn - 1.6) / 2;
            } else {
                lo = (nn - 2) / 2;
                hi = nn / 2;
            }
            break;
        default:  // T1
            lo = (nn - 1) / 2;
            hi = nn / 2;
            break;
    }

    double flo = eval_factor(family, lo, nn);
    double fhi = eval_factor(family, hi, nn);
    if (!(flo < 0.0 && fhi > 0.0)) {
        // Fall back to a wide bracket; below the subdominant roots this
        // still isolates the largest one at these orders.
        lo = (nn - 2) / 2;
        hi = nn / 2;
        flo = eval_factor(family, lo, nn);
        fhi = eval_factor(family, hi, nn);
        if (!(flo < 0.0 && fhi > 0.0))
            throw std::runtime_error("largest_root: bracket sign condition violated, f(" +
                                     std::to_string(lo) + ")=" + std::to_string(flo) + ", f(" +
                                     std::to_string(hi) + ")=" + std::to_string(fhi));
    }

    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (eval_factor(family, mid, nn) < 0.0)
            lo = mid;
        else
            hi = mid;
    }

    double x = 0.5 * (lo + hi);
    for (int step = 0; step < 5; ++step) {
        double scale;
        const double f = eval_factor(family, x, nn, &scale);
        if (std::abs(f) <= 1e-12 * scale) break;
        const double d = eval_factor_derivative(family, x, n);
        if (d == 0.0) break;
        const double next = x - f / d;
        if (next < lo || next > hi) break;
        x = next;
    }
    return x;
}

double row_image(const Graph& g, int v) {
    const int dv = g.degree(v);
    if (dv < 1) throw std::domain_error("row_image: isolated vertex");
    double s = 0.0;
    for (int u : g.neighbors(v))
        s += edge_weight(WeightScheme::AG, dv, g.degree(u)) * std::sqrt(double(g.degree(u)));
    return s;
}

double lemma4_bound(const Graph& g, int v) {
    const double dv = g.degree(v);
    if (dv < 1) throw std::domain_error("lemma4_bound: isolated vertex");
    const double m = g.size(), n = g.order();
    return (dv * dv + 2 * m - n + 1) / (2 * std::sqrt(dv));
}

std::optional<double> lemma7_threshold(int n, int delta) {
    require_order(n, 8, "lemma7_threshold");
    if (n <= 15 && delta <= n - 4) return (n - 1.45) / 2;
    if (n >= 16 && n <= 21 && delta <= n - 3) return (n - 1.65) / 2;
    if (n >= 22 && delta <= n - 3) return (n - 1.75) / 2;
    return std::nullopt;
}

double zheng_upper_bound(int n, int m) {
    if (n < 2) throw std::domain_error("zheng_upper_bound: n must be >= 2");
    if (m < n - 1) throw std::domain_error("zheng_upper_bound: m must be >= n-1");
    const double r = std::sqrt(double(n - 1));
    return 0.5 * (r + 1.0 / r) * std::sqrt(2.0 * m - n + 1);
}

}  // namespace agspec
