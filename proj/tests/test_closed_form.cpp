#include <doctest.h>

#include <cmath>

#include "agspec/closed_form.hpp"
#include "agspec/enumerate.hpp"
#include "agspec/graph.hpp"
#include "agspec/spectral.hpp"
#include "agspec/weights.hpp"

using agspec::build_family;
using agspec::eval_g3_derivative;
using agspec::eval_poly;
using agspec::Graph;
using agspec::largest_root;
using agspec::NamedFamily;
using agspec::PolyFamily;

namespace {

double family_radius(NamedFamily fam, int n) {
    return agspec::full_spectrum(agspec::weighted_adjacency(build_family(fam, n),
                                                            agspec::WeightScheme::AG))
        .eigenvalues[0];
}

}  // namespace

TEST_CASE("factor evaluations at rational points") {
    // g1((n-1)/2, 7) collapses to n^4/2 - 3n^3 - 5n^2/2 + 12n - 7 = 126
    CHECK(std::abs((eval_poly(PolyFamily::G1Factor, 3.0, 7)) - (126.0).epsilon(1e-12));
    // t1(0, n) = (n-3) n^2 / (4(n-1))
    CHECK(eval_poly(PolyFamily::T1, 0.0, 8) == doctest::Approx(80.0 / 7.0).epsilon(1e-14));
}

TEST_CASE("printed boundary expansions match the transcribed factors") {
    // two independently printed forms of the same quantity
    for (int n = 2; n <= 40; ++n) {
        const double nn = n;
        if (n >= 7) {
            const double printed = nn * nn * nn * nn / 2 - 3 * nn * nn * nn -
                                   5 * nn * nn / 2 + 12 * nn - 7;
            CHECK(eval_poly(PolyFamily::G1Factor, (nn - 1) / 2, n) ==
                  doctest::Approx(printed).epsilon(1e-11));
        }
        const double printed_lo = -3 * nn * nn * nn / 8 - 25 * nn * nn / 8 +
                                  93 * nn / 32 + 23.0 / 16;
        CHECK(eval_poly(PolyFamily::G1Factor, (nn - 1.5) / 2, n) ==
              doctest::Approx(printed_lo).epsilon(1e-10).scale(std::abs(printed_lo) + 1));
        const double printed_d4 = 672 * nn * nn * nn - 3480 * nn * nn + 27576 * nn / 5 -
                                  13152.0 / 5;
        CHECK(eval_g3_derivative(4, (nn - 1.6) / 2, n) ==
              doctest::Approx(printed_d4).epsilon(1e-10).scale(std::abs(printed_d4) + 1));
    }
}

TEST_CASE("g3 derivative chain") {
    CHECK(eval_g3_derivative(4, (3 - 1.6) / 2.0, 3) == doctest::Approx(739.2).epsilon(1e-12));
    CHECK(eval_g3_derivative(3, (4 - 1.6) / 2.0, 4) > 0.0);
    CHECK_THROWS_AS(eval_g3_derivative(0, 1.0, 8), std::domain_error);
    CHECK_THROWS_AS(eval_g3_derivative(5, 1.0, 8), std::domain_error);

    // each order agrees with a central finite difference of the previous one
    for (int n : {6, 11, 23}) {
        for (double rho : {1.3, 3.7, (n - 1.6) / 2.0}) {
            const double h = 1e-5;
            auto lower = [&](int k, double x) {
                return k == 0 ? eval_poly(PolyFamily::G3Factor, x, n)
                              : eval_g3_derivative(k, x, n);
            };
            for (int k = 1; k <= 4; ++k) {
                const double fd = (lower(k - 1, rho + h) - lower(k - 1, rho - h)) / (2 * h);
                const double an = eval_g3_derivative(k, rho, n);
                CHECK(std::abs(fd - an) <= 1e-6 * (1.0 + std::abs(an)));
            }
        }
    }
}

TEST_CASE("full polynomials vanish at the eigenvalues") {
    struct Pair {
        PolyFamily poly;
        NamedFamily fam;
    };
    const Pair pairs[] = {{PolyFamily::Phi1, NamedFamily::G1},
                          {PolyFamily::Phi2, NamedFamily::G2},
                          {PolyFamily::Phi3, NamedFamily::G3},
                          {PolyFamily::PhiStarPlusEdge, NamedFamily::StarPlusEdge}};
    for (int n : {5, 8, 13, 20}) {
        for (const auto& [poly, fam] : pairs) {
            const auto spec = agspec::full_spectrum(
                agspec::weighted_adjacency(build_family(fam, n), agspec::WeightScheme::AG));
            const double rho = spec.eigenvalues[0];
            const double scale = 1.0 + std::pow(rho, n);
            for (double ev : spec.eigenvalues)
                CHECK(std::abs(eval_poly(poly, ev, n)) <= 1e-6 * scale);
        }
    }
    // raw residual at the top eigenvalue stays tiny at order 8
    const double rho8 = family_radius(NamedFamily::G1, 8);
    CHECK(std::abs(eval_poly(PolyFamily::Phi1, rho8, 8)) <= 1e-6);
}

TEST_CASE("eval_poly preconditions") {
    CHECK_THROWS_AS(eval_poly(PolyFamily::Phi1, 1.0, 4), std::domain_error);
    CHECK_THROWS_AS(eval_poly(PolyFamily::G1Factor, 1.0, 1), std::domain_error);
    CHECK_THROWS_AS(eval_poly(PolyFamily::T1, std::nan(""), 8), std::domain_error);
    CHECK_NOTHROW(eval_poly(PolyFamily::G3Factor, 1.0, 4));  // sign checks reach down here
}

TEST_CASE("largest roots sit in the proven brackets") {
    const double t1_root = largest_root(PolyFamily::T1, 8);
    CHECK(t1_root > 3.5);
    CHECK(t1_root < 4.0);
    CHECK(std::abs(largest_root(PolyFamily::G1Factor, 15) - 6.7812) <= 5e-4);
    CHECK(std::abs(largest_root(PolyFamily::G3Factor, 21) - 9.6757) <= 5e-4);
}

TEST_CASE("largest roots equal the eigensolver radii") {
    struct Pair {
        PolyFamily poly;
        NamedFamily fam;
    };
    const Pair pairs[] = {{PolyFamily::G1Factor, NamedFamily::G1},
                          {PolyFamily::G2Factor, NamedFamily::G2},
                          {PolyFamily::G3Factor, NamedFamily::G3},
                          {PolyFamily::T1, NamedFamily::StarPlusEdge}};
    for (int n : {8, 16, 22, 33}) {
        for (const auto& [poly, fam] : pairs)
            CHECK(std::abs((std::abs(largest_root(poly, n) - family_radius(fam, n)) <= 1e-8); } } TEST_CASE("largest_root preconditions") { CHECK_THROWS_AS(largest_root(PolyFamily::Phi1, 10), std::invalid_argument); CHECK_THROWS_AS(largest_root(PolyFamily::T1, 7), std::domain_error); } TEST_CASE("row image and its bound") { const Graph c5 = build_family(NamedFamily::Cycle, 5); for (int v = 0; v < 5; ++v) { CHECK(agspec::lemma4_bound(c5, v)) - (10.0 / (2.0 * std::sqrt(2.0))));
        CHECK(agspec::row_image(c5, v) == doctest::Approx(2.0 * std::sqrt(2.0)));
        CHECK(agspec::row_image(c5, v) <= agspec::lemma4_bound(c5, v));
    }

    // pendant of S_8+e: (A_ag X)_v = (1 + d_hub)/2 = 4
    const Graph se8 = build_family(NamedFamily::StarPlusEdge, 8);
    for (int v = 0; v < 8; ++v)
        if (se8.degree(v) == 1)
            CHECK(agspec::row_image(se8, v) == doctest::Approx(4.0).epsilon(1e-14));

    // holds at every vertex of every small unicyclic graph
    for (const Graph& g : agspec::enumerate_unicyclic(7))
        for (int v = 0; v < g.order(); ++v)
            CHECK(agspec::row_image(g, v) <= agspec::lemma4_bound(g, v) + 1e-12);
}

TEST_CASE("piecewise thresholds") {
    CHECK(agspec::lemma7_threshold(22, 10) == doctest::Approx(10.125));
    CHECK(agspec::lemma7_threshold(16, 13) == doctest::Approx(7.175));
    CHECK_FALSE(agspec::lemma7_threshold(10, 7).has_value());   // delta = n-3, small order
    CHECK(agspec::lemma7_threshold(12, 8) == doctest::Approx((12 - 1.45) / 2));
    CHECK_FALSE(agspec::lemma7_threshold(18, 16).has_value());  // delta = n-2
    CHECK_THROWS_AS(agspec::lemma7_threshold(7, 3), std::domain_error);
}

TEST_CASE("order-size upper bound") {
    CHECK(agspec::zheng_upper_bound(5, 4) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(std::abs(agspec::zheng_upper_bound(8, 8) - 4.5356) <= 5e-4);
    CHECK(agspec::zheng_upper_bound(2, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(agspec::zheng_upper_bound(1, 1), std::domain_error);
    CHECK_THROWS_AS(agspec::zheng_upper_bound(5, 3), std::domain_error);
}

TEST_CASE("sign conditions sampled across their ranges") {
    for (int n : {7, 12, 50, 200}) CHECK(eval_poly(PolyFamily::G1Factor, (n - 1.0) / 2, n) > 0);
    for (int n : {2, 9, 100}) CHECK(eval_poly(PolyFamily::G1Factor, (n - 1.5) / 2, n) < 0);
    for (int n : {22, 60, 200}) CHECK(eval_poly(PolyFamily::G2Factor, (n - 1.5) / 2, n) > 0);
    for (int n : {2, 21, 150}) CHECK(eval_poly(PolyFamily::G2Factor, (n - 1.6) / 2, n) < 0);
    for (int n : {17, 80, 200}) CHECK(eval_poly(PolyFamily::G3Factor, (n - 1.6) / 2, n) > 0);
    for (int n : {4, 16, 120}) CHECK(eval_poly(PolyFamily::G3Factor, (n - 1.75) / 2, n) < 0);
    for (int n : {8, 30, 200}) {
        CHECK(eval_poly(PolyFamily::T1, (n - 1.0) / 2, n) < 0);
        CHECK(eval_poly(PolyFamily::T1, n / 2.0, n) > 0);
    }
}
