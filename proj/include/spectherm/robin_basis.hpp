#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spectherm/errors.hpp"
#include "spectherm/spectral_core.hpp"

namespace spectherm {

// Homogeneous Robin data at the two ends of [-1,1]:
//   a_plus  f(+1) + b_plus  f'(+1) = 0
//   a_minus f(-1) + b_minus f'(-1) = 0
struct RobinBC {
    double a_plus = 0.0;
    double b_plus = 0.0;
    double a_minus = 0.0;
    double b_minus = 0.0;
};

struct RobinCoeffs {
    double zeta = 0.0;
    double eta = 0.0;
};

// Combination coefficients of phi_n = C_n + zeta_n C_{n+1} + eta_n C_{n+2}
// satisfying both Robin conditions. Throws DegenerateBcError when the
// endpoint system is singular for this n (relative test on the term scale).
RobinCoeffs robin_basis_coeffs(int n, const RobinBC& bc);

// Boundary-adapted basis phi_0..phi_{N-1}; immutable after construction.
class RobinBasis {
public:
    RobinBasis(int count, const RobinBC& bc);

    int count() const { return static_cast<int>(coeffs_.size()); }
    const RobinBC& bc() const { return bc_; }
    const RobinCoeffs& coeffs(int n) const;

    // phi_n (deriv 0), phi_n' (1), or phi_n'' (2) at x.
    double eval(int n, double x, int deriv = 0) const;

    // Rows are nodes, columns are basis functions, all at one derivative order.
    Eigen::MatrixXd vandermonde(const Eigen::VectorXd& nodes, int deriv = 0) const;

private:
    RobinBC bc_;
    std::vector<RobinCoeffs> coeffs_;
};

} // namespace spectherm
