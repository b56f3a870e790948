#pragma once

#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "spectherm/errors.hpp"

namespace spectherm {

// First-kind Chebyshev polynomial C_n(x) by the three-term recurrence.
// x may exceed [-1,1] by at most 1e-12 (endpoint roundoff) and is clamped.
double chebyshev_eval(int n, double x);

// dC_n/dx (order 1) or d^2C_n/dx^2 (order 2), by differentiated recurrences.
// Exact at the endpoints: C_n'(+-1) = (+-1)^(n+1) n^2,
// C_n''(+-1) = (+-1)^n n^2 (n^2 - 1)/3.
double chebyshev_deriv(int n, double x, int order);

struct QuadratureRule {
    Eigen::VectorXd nodes;   // x_j = cos(j pi/(order-1)), descending
    Eigen::VectorXd weights; // sum to 2
    int order = 0;
};

// Clenshaw-Curtis rule with `order` nodes; exact for degree <= order-1.
QuadratureRule clenshaw_curtis(int order);

// Node count used for every Galerkin integral built on an N-function basis.
// Integrands are polynomials of degree <= 2(N+2)+1 times a linear weight,
// so 4(N+3) nodes are exact up to rounding.
inline int quadrature_order(int basis_count) { return 4 * (basis_count + 3); }

// Scaled cylindrical volume weight w(rhat) = (1 + rhat + alpha r_in)/alpha.
struct RadialWeight {
    double alpha = 0.0;
    double r_in = 0.0;
    double operator()(double rhat) const { return (1.0 + rhat + alpha * r_in) / alpha; }
};

namespace detail {
[[noreturn]] void throw_nonfinite(double x);
[[noreturn]] void throw_nonfinite(double x, double y);
} // namespace detail

// Integral of f over [-1,1] with an optional pointwise weight.
template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
    double acc = 0.0;
    for (int j = 0; j < rule.order; ++j) {
        const double v = f(rule.nodes[j]);
        if (!std::isfinite(v)) detail::throw_nonfinite(rule.nodes[j]);
        acc += rule.weights[j] * v;
    }
    return acc;
}

template <class W, class F>
double integrate_weighted(const QuadratureRule& rule, W&& w, F&& f) {
    return integrate(rule, [&](double x) { return w(x) * f(x); });
}

// Tensor-product integral of f(rhat, zhat) with the radial weight on rhat.
template <class F>
double integrate2d_radial(const QuadratureRule& rule_r, const QuadratureRule& rule_z,
                          const RadialWeight& w, F&& f) {
    double acc = 0.0;
    for (int a = 0; a < rule_r.order; ++a) {
        const double x = rule_r.nodes[a];
        double inner = 0.0;
        for (int b = 0; b < rule_z.order; ++b) {
            const double v = f(x, rule_z.nodes[b]);
            if (!std::isfinite(v)) detail::throw_nonfinite(x, rule_z.nodes[b]);
            inner += rule_z.weights[b] * v;
        }
        acc += rule_r.weights[a] * w(x) * inner;
    }
    return acc;
}

} // namespace spectherm
