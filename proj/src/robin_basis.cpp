#include "spectherm/robin_basis.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace spectherm {

RobinCoeffs robin_basis_coeffs(int n, const RobinBC& bc) {
    if (n < 0) throw std::domain_error("basis degree must be non-negative");
    const double ap = bc.a_plus, bp = bc.b_plus, am = bc.a_minus, bm = bc.b_minus;
    const double n1 = static_cast<double>(n + 1), n2 = static_cast<double>(n + 2);
    const double nn = static_cast<double>(n);
    const double det = 2.0 * ap * am
                     + (n1 * n1 + n2 * n2) * (am * bp - ap * bm)
                     - 2.0 * bm * bp * n1 * n1 * n2 * n2;
    const double scale = 2.0 * std::abs(ap * am)
                       + (n1 * n1 + n2 * n2) * (std::abs(am * bp) + std::abs(ap * bm))
                       + 2.0 * std::abs(bm * bp) * n1 * n1 * n2 * n2;
    if (scale == 0.0 || std::abs(det) < 1e-14 * scale) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "degenerate Robin endpoint system at degree n=%d", n);
        throw DegenerateBcError(n, buf);
    }
    RobinCoeffs c;
    c.zeta = 4.0 * n1 * (ap * bm + am * bp) / det;
    c.eta = (-2.0 * am * ap
             + (nn * nn + n1 * n1) * (ap * bm - am * bp)
             + 2.0 * bm * bp * nn * nn * n1 * n1) / det;
    return c;
}

RobinBasis::RobinBasis(int count, const RobinBC& bc) : bc_(bc) {
    if (count < 1) throw std::domain_error("basis count must be >= 1");
    coeffs_.reserve(count);
    for (int n = 0; n < count; ++n) coeffs_.push_back(robin_basis_coeffs(n, bc));
}

const RobinCoeffs& RobinBasis::coeffs(int n) const {
    if (n < 0 || n >= count()) throw std::out_of_range("basis index out of range");
    return coeffs_[static_cast<size_t>(n)];
}

double RobinBasis::eval(int n, double x, int deriv) const {
    const RobinCoeffs& c = coeffs(n);
    if (deriv == 0)
        return chebyshev_eval(n, x) + c.zeta * chebyshev_eval(n + 1, x)
             + c.eta * chebyshev_eval(n + 2, x);
    return chebyshev_deriv(n, x, deriv) + c.zeta * chebyshev_deriv(n + 1, x, deriv)
         + c.eta * chebyshev_deriv(n + 2, x, deriv);
}

Eigen::MatrixXd RobinBasis::vandermonde(const Eigen::VectorXd& nodes, int deriv) const {
    Eigen::MatrixXd v(nodes.size(), count());
    for (Eigen::Index i = 0; i < nodes.size(); ++i)
        for (int n = 0; n < count(); ++n) v(i, n) = eval(n, nodes[i], deriv);
    return v;
}

} // namespace spectherm
