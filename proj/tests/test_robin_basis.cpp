#include <doctest.h>

#include <cmath>
#include <random>

#include "spectherm/robin_basis.hpp"

using namespace spectherm;

namespace {

double residual_plus(const RobinBasis& basis, int n) {
    const RobinBC& bc = basis.bc();
    return bc.a_plus * basis.eval(n, 1.0) + bc.b_plus * basis.eval(n, 1.0, 1);
}

double residual_minus(const RobinBasis& basis, int n) {
    const RobinBC& bc = basis.bc();
    return bc.a_minus * basis.eval(n, -1.0) + bc.b_minus * basis.eval(n, -1.0, 1);
}

// Residuals scale like n^2 max(|a|,|b|), so normalize before comparing.
double bc_scale(const RobinBC& bc, int n) {
    const double m = std::max({std::abs(bc.a_plus), std::abs(bc.b_plus),
                               std::abs(bc.a_minus), std::abs(bc.b_minus), 1.0});
    return m * (n + 2.0) * (n + 2.0);
}

} // namespace

TEST_CASE("dirichlet ends give zeta=0, eta=-1 exactly") {
    const RobinBC bc{1.0, 0.0, 1.0, 0.0};
    for (int n = 0; n < 12; ++n) {
        const RobinCoeffs c = robin_basis_coeffs(n, bc);
        CHECK(c.zeta == 0.0);
        CHECK(c.eta == -1.0);
    }
    const RobinBasis basis(6, bc);
    CHECK(basis.eval(0, 0.0) == doctest::Approx(2.0).epsilon(1e-15)); // C_0 - C_2 at 0
    for (int n = 0; n < 6; ++n) {
        CHECK(basis.eval(n, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(basis.eval(n, -1.0) == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("neumann ends give zeta=0, eta=-n^2/(n+2)^2 exactly") {
    const RobinBC bc{0.0, 1.0, 0.0, 1.0};
    for (int n = 0; n < 12; ++n) {
        const RobinCoeffs c = robin_basis_coeffs(n, bc);
        CHECK(c.zeta == 0.0);
        CHECK(c.eta == doctest::Approx(-double(n) * n / ((n + 2.0) * (n + 2.0)))
                           .epsilon(1e-15));
    }
    const RobinBasis basis(6, bc);
    // phi_0 degenerates to the constant, and every slope vanishes at the ends.
    CHECK(basis.eval(0, 0.33) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(basis.eval(0, -0.9) == doctest::Approx(1.0).epsilon(1e-14));
    for (int n = 0; n < 6; ++n) {
        CHECK(basis.eval(n, 1.0, 1) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(basis.eval(n, -1.0, 1) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("convective cell faces satisfy both robin conditions") {
    // outer face h=100, k=0.66; inner face adiabatic; alpha from the annulus
    const double alpha = 2.0 / (0.032 - 0.004);
    const RobinBC bc{100.0 / 0.66, alpha, 0.0, alpha};
    const RobinBasis basis(10, bc);
    for (int n = 0; n < 10; ++n) {
        CHECK(std::abs(residual_plus(basis, n)) / bc_scale(bc, n) <= 1e-10);
        CHECK(std::abs(residual_minus(basis, n)) / bc_scale(bc, n) <= 1e-10);
    }
}

TEST_CASE("random robin data keeps residuals at roundoff") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> hk(0.1, 300.0);
    std::uniform_real_distribution<double> bb(0.5, 80.0);
    for (int trial = 0; trial < 50; ++trial) {
        // convection-like signs: a_plus >= 0, a_minus <= 0, b > 0
        const RobinBC bc{hk(rng), bb(rng), -hk(rng), bb(rng)};
        const RobinBasis basis(8, bc);
        for (int n = 0; n < 8; ++n) {
            CHECK(std::abs(residual_plus(basis, n)) / bc_scale(bc, n) <= 1e-10);
            CHECK(std::abs(residual_minus(basis, n)) / bc_scale(bc, n) <= 1e-10);
        }
    }
}

TEST_CASE("basis functions are the stated three-term combinations") {
    const RobinBC bc{3.0, 2.0, -1.5, 4.0};
    const RobinBasis basis(5, bc);
    for (int n = 0; n < 5; ++n) {
        const RobinCoeffs c = basis.coeffs(n);
        for (double x : {-0.77, 0.0, 0.41, 1.0}) {
            const double manual = chebyshev_eval(n, x) + c.zeta * chebyshev_eval(n + 1, x) +
                                  c.eta * chebyshev_eval(n + 2, x);
            CHECK(basis.eval(n, x) == doctest::Approx(manual).epsilon(1e-14));
            const double dmanual = chebyshev_deriv(n, x, 1) +
                                   c.zeta * chebyshev_deriv(n + 1, x, 1) +
                                   c.eta * chebyshev_deriv(n + 2, x, 1);
            CHECK(basis.eval(n, x, 1) == doctest::Approx(dmanual).epsilon(1e-13));
        }
    }
}

TEST_CASE("vandermonde matches pointwise evaluation") {
    const RobinBC bc{10.0, 1.0, -4.0, 1.0};
    const RobinBasis basis(4, bc);
    Eigen::VectorXd nodes(3);
    nodes << -1.0, 0.25, 1.0;
    for (int deriv : {0, 1, 2}) {
        const Eigen::MatrixXd V = basis.vandermonde(nodes, deriv);
        REQUIRE(V.rows() == 3);
        REQUIRE(V.cols() == 4);
        for (int i = 0; i < 3; ++i)
            for (int n = 0; n < 4; ++n)
                CHECK(V(i, n) == doctest::Approx(basis.eval(n, nodes[i], deriv))
                                     .epsilon(1e-14));
    }
}

TEST_CASE("singular endpoint systems are reported with the degree") {
    // a_plus(2 a_minus - 5 b_minus) = 0 at n = 0 for (1, 0, 5, 2)
    const RobinBC bc{1.0, 0.0, 5.0, 2.0};
    CHECK_THROWS_AS(robin_basis_coeffs(0, bc), DegenerateBcError);
    try {
        RobinBasis basis(3, bc);
        FAIL("expected DegenerateBcError");
    } catch (const DegenerateBcError& e) {
        CHECK(e.degree() == 0);
    }
}

TEST_CASE("construction and index guards") {
    const RobinBC bc{1.0, 1.0, -1.0, 1.0};
    CHECK_THROWS_AS(RobinBasis(0, bc), std::domain_error);
    const RobinBasis basis(3, bc);
    CHECK(basis.count() == 3);
    CHECK_THROWS_AS(basis.coeffs(3), std::out_of_range);
    CHECK_THROWS_AS(basis.eval(-1, 0.0), std::out_of_range);
    CHECK_THROWS_AS(basis.eval(0, 0.0, 3), std::domain_error);
}
