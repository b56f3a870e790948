#include "spectherm/spectral_core.hpp"

#include <cmath>
#include <cstdio>

namespace spectherm {

namespace {

constexpr double kClampTol = 1e-12;

double clamp_argument(double x) {
    if (std::abs(x) > 1.0 + kClampTol)
        throw std::domain_error("chebyshev argument outside [-1,1]: x=" + std::to_string(x));
    return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x);
}

} // namespace

double chebyshev_eval(int n, double x) {
    if (n < 0) throw std::domain_error("chebyshev degree must be non-negative");
    x = clamp_argument(x);
    if (n == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int k = 2; k <= n; ++k) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double chebyshev_deriv(int n, double x, int order) {
    if (n < 0) throw std::domain_error("chebyshev degree must be non-negative");
    if (order != 1 && order != 2) throw std::domain_error("derivative order must be 1 or 2");
    x = clamp_argument(x);
    // Differentiated recurrences; no (1-x^2) division, exact at the endpoints.
    double p = 1.0, dp = 0.0, ddp = 0.0;
    if (n == 0) return 0.0;
    double pn = x, dpn = 1.0, ddpn = 0.0;
    for (int k = 2; k <= n; ++k) {
        const double pk = 2.0 * x * pn - p;
        const double dpk = 2.0 * pn + 2.0 * x * dpn - dp;
        const double ddpk = 4.0 * dpn + 2.0 * x * ddpn - ddp;
        p = pn; dp = dpn; ddp = ddpn;
        pn = pk; dpn = dpk; ddpn = ddpk;
    }
    return order == 1 ? dpn : ddpn;
}

QuadratureRule clenshaw_curtis(int order) {
    if (order < 2) throw std::domain_error("clenshaw_curtis requires order >= 2");
    const int n = order - 1;
    QuadratureRule rule;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int j = 0; j <= n; ++j) {
        rule.nodes[j] = std::cos(j * M_PI / n);
        // w_j = c_j/n (1 - sum_k b_k/(4k^2-1) cos(2kj pi/n)), c_j = 1 at the
        // ends and 2 inside, b_k = 1 when 2k = n and 2 otherwise.
        const double c = (j == 0 || j == n) ? 1.0 : 2.0;
        double s = 0.0;
        for (int k = 1; k <= n / 2; ++k) {
            const double b = (2 * k == n) ? 1.0 : 2.0;
            s += b / (4.0 * k * k - 1.0) * std::cos(2.0 * M_PI * k * j / n);
        }
        rule.weights[j] = c / n * (1.0 - s);
    }
    // Endpoint cosines are +-1 exactly; enforce against libm rounding.
    rule.nodes[0] = 1.0;
    rule.nodes[n] = -1.0;
    if (n % 2 == 0) rule.nodes[n / 2] = 0.0;
    return rule;
}

namespace detail {

void throw_nonfinite(double x) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "non-finite integrand at node x=%.17g", x);
    throw NumericError(buf);
}

void throw_nonfinite(double x, double y) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "non-finite integrand at node (%.17g, %.17g)", x, y);
    throw NumericError(buf);
}

} // namespace detail

} // namespace spectherm
