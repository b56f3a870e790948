#include <doctest.h>

#include <cmath>
#include <random>

#include "spectherm/spectral_core.hpp"

using namespace spectherm;

TEST_CASE("chebyshev values match closed forms") {
    // C_0 = 1, C_1 = x, C_2 = 2x^2 - 1, C_5(0.3) via cos(5 acos 0.3)
    CHECK(chebyshev_eval(0, 0.37) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(chebyshev_eval(1, -0.81) == doctest::Approx(-0.81).epsilon(1e-15));
    CHECK(chebyshev_eval(2, 0.5) == doctest::Approx(-0.5).epsilon(1e-14));
    for (int n : {3, 5, 8, 13})
        for (double x : {-0.95, -0.2, 0.0, 0.31, 0.99})
            CHECK(chebyshev_eval(n, x) ==
                  doctest::Approx(std::cos(n * std::acos(x))).epsilon(1e-12));
    CHECK(chebyshev_eval(7, 1.0) == doctest::Approx(1.0));
    CHECK(chebyshev_eval(7, -1.0) == doctest::Approx(-1.0));
}

TEST_CASE("chebyshev endpoint slack and domain errors") {
    CHECK(chebyshev_eval(4, 1.0 + 1e-13) == doctest::Approx(1.0));
    CHECK(chebyshev_eval(4, -1.0 - 1e-13) == doctest::Approx(1.0));
    CHECK_THROWS_AS(chebyshev_eval(4, 1.0 + 1e-9), std::domain_error);
    CHECK_THROWS_AS(chebyshev_eval(-1, 0.0), std::domain_error);
    CHECK_THROWS_AS(chebyshev_deriv(3, 0.0, 0), std::domain_error);
    CHECK_THROWS_AS(chebyshev_deriv(3, 0.0, 3), std::domain_error);
}

TEST_CASE("chebyshev derivatives match finite differences") {
    const double h = 1e-6;
    for (int n : {1, 2, 4, 7, 11}) {
        for (double x : {-0.8, -0.3, 0.1, 0.6}) {
            const double fd1 =
                (chebyshev_eval(n, x + h) - chebyshev_eval(n, x - h)) / (2 * h);
            const double fd2 = (chebyshev_eval(n, x + h) - 2 * chebyshev_eval(n, x) +
                                chebyshev_eval(n, x - h)) /
                               (h * h);
            CHECK(chebyshev_deriv(n, x, 1) == doctest::Approx(fd1).epsilon(1e-6));
            CHECK(chebyshev_deriv(n, x, 2) == doctest::Approx(fd2).epsilon(2e-3));
        }
    }
}

TEST_CASE("chebyshev endpoint derivative identities") {
    for (int n = 0; n <= 12; ++n) {
        const double s = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(chebyshev_deriv(n, 1.0, 1) == doctest::Approx(double(n) * n).epsilon(1e-13));
        CHECK(chebyshev_deriv(n, -1.0, 1) ==
              doctest::Approx(-s * n * n).epsilon(1e-13)); // (-1)^(n+1) n^2
        CHECK(chebyshev_deriv(n, 1.0, 2) ==
              doctest::Approx(double(n) * n * (n * n - 1) / 3.0).epsilon(1e-12));
        CHECK(chebyshev_deriv(n, -1.0, 2) ==
              doctest::Approx(s * n * n * (n * n - 1) / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("clenshaw-curtis low orders are the classical rules") {
    const QuadratureRule r2 = clenshaw_curtis(2);
    CHECK(r2.nodes[0] == doctest::Approx(1.0));
    CHECK(r2.nodes[1] == doctest::Approx(-1.0));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-14));

    const QuadratureRule r3 = clenshaw_curtis(3);
    CHECK(r3.nodes[1] == doctest::Approx(0.0));
    CHECK(r3.weights[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(r3.weights[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(r3.weights[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    CHECK_THROWS_AS(clenshaw_curtis(1), std::domain_error);
}

TEST_CASE("clenshaw-curtis symmetry and normalization") {
    for (int order : {2, 3, 8, 9, 24, 25}) {
        const QuadratureRule r = clenshaw_curtis(order);
        CHECK(r.weights.sum() == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(r.weights.minCoeff() > 0.0);
        for (int j = 0; j < order; ++j) {
            CHECK(r.nodes[j] == doctest::Approx(-r.nodes[order - 1 - j]).epsilon(1e-14));
            CHECK(r.weights[j] == doctest::Approx(r.weights[order - 1 - j]).epsilon(1e-13));
        }
        for (int j = 1; j < order; ++j) CHECK(r.nodes[j] < r.nodes[j - 1]);
    }
}

TEST_CASE("quadrature integrates monomials exactly") {
    const QuadratureRule r = clenshaw_curtis(7);
    CHECK(integrate(r, [](double x) { return x * x * x * x; }) ==
          doctest::Approx(0.4).epsilon(1e-14));
    CHECK(integrate(r, [](double x) { return x * x * x; }) ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("quadrature exact for random polynomials below the order") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int order : {4, 9, 16}) {
        const QuadratureRule r = clenshaw_curtis(order);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> c(static_cast<size_t>(order)); // degree order-1
            double exact = 0.0;
            for (int k = 0; k < order; ++k) {
                c[static_cast<size_t>(k)] = coeff(rng);
                if (k % 2 == 0) exact += 2.0 * c[static_cast<size_t>(k)] / (k + 1);
            }
            const double got = integrate(r, [&](double x) {
                double acc = 0.0, p = 1.0;
                for (int k = 0; k < order; ++k, p *= x) acc += c[static_cast<size_t>(k)] * p;
                return acc;
            });
            CHECK(got == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("radial weight integrates to the scaled cross-section") {
    // integral of w over rhat = r_in + r_out; w(rhat) is the physical radius
    const double alpha = 2.0 / (0.032 - 0.004);
    const RadialWeight w{alpha, 0.004};
    const QuadratureRule r = clenshaw_curtis(8);
    CHECK(integrate_weighted(r, w, [](double) { return 1.0; }) ==
          doctest::Approx(0.036).epsilon(1e-14));
    CHECK(w(-1.0) == doctest::Approx(0.004).epsilon(1e-12));
    CHECK(w(1.0) == doctest::Approx(0.032).epsilon(1e-12));
}

TEST_CASE("tensor integral applies the radial weight once") {
    const double alpha = 2.0 / (0.032 - 0.004);
    const RadialWeight w{alpha, 0.004};
    const QuadratureRule r = clenshaw_curtis(10);
    // separable: (integral of w drhat) * (integral of zhat^2 dzhat)
    const double got =
        integrate2d_radial(r, r, w, [](double, double zh) { return zh * zh; });
    CHECK(got == doctest::Approx(0.036 * (2.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("non-finite integrands are rejected with coordinates") {
    const QuadratureRule r = clenshaw_curtis(5);
    CHECK_THROWS_AS(integrate(r, [](double x) { return 1.0 / (x - x); }), NumericError);
    const RadialWeight w{1.0, 0.0};
    CHECK_THROWS_AS(integrate2d_radial(r, r, w,
                                       [](double, double) {
                                           return std::numeric_limits<double>::quiet_NaN();
                                       }),
                    NumericError);
}

TEST_CASE("galerkin quadrature order covers the integrand degree") {
    CHECK(quadrature_order(2) == 20);
    CHECK(quadrature_order(15) == 72);
}
