#pragma once

#include <Eigen/Dense>

#include "spectherm/robin_basis.hpp"
#include "spectherm/spectral_core.hpp"

namespace spectherm {

// Scaled Robin data of all four faces plus the face source terms
// e = (coefficient) x (face ambient temperature).
struct BcConstants {
    double a_plus = 0.0, b_plus = 0.0, a_minus = 0.0, b_minus = 0.0;  // radial
    double c_plus = 0.0, d_plus = 0.0, c_minus = 0.0, d_minus = 0.0;  // axial
    double e_top = 0.0;     // rhat = +1
    double e_bottom = 0.0;  // rhat = -1
    double e_right = 0.0;   // zhat = +1
    double e_left = 0.0;    // zhat = -1
};

enum class LiftingDeriv { Value, DR, DRR, DZ, DZZ };

// T_e(rhat,zhat) = sum_k (d1_k zhat + d2_k zhat^2) phi_k^r
//                + sum_j (d3_j rhat + d4_j rhat^2) phi_j^z
// Absorbs the non-homogeneous Robin data weakly; no corner terms.
class LiftingField {
public:
    LiftingField(RobinBasis radial, RobinBasis axial,
                 Eigen::VectorXd d1, Eigen::VectorXd d2,
                 Eigen::VectorXd d3, Eigen::VectorXd d4);

    double eval(double rhat, double zhat, LiftingDeriv deriv = LiftingDeriv::Value) const;

    const RobinBasis& radial_basis() const { return radial_; }
    const RobinBasis& axial_basis() const { return axial_; }
    const Eigen::VectorXd& d1() const { return d1_; }
    const Eigen::VectorXd& d2() const { return d2_; }
    const Eigen::VectorXd& d3() const { return d3_; }
    const Eigen::VectorXd& d4() const { return d4_; }

private:
    RobinBasis radial_;
    RobinBasis axial_;
    Eigen::VectorXd d1_, d2_, d3_, d4_;
};

// Solves the two decoupled weak systems for the d vectors. The axial-face
// conditions reduce to [k1 P, k2 P; k3 P, k4 P][d1;d2] = [e_r s; e_l s] with
// P the radial-weighted Gram matrix and s the weighted basis integrals; the
// scalar prefactor form below is its closed-form solution. Radial faces are
// analogous with unit weight and j1..j4.
LiftingField solve_lifting_systems(const RobinBasis& radial, const RobinBasis& axial,
                                   const BcConstants& bc, const RadialWeight& weight);

// [T_e at (-1,0), (0,-1), (1,0), (0,1), radially-weighted mean].
Eigen::VectorXd lifting_outputs(const LiftingField& lifting, const RadialWeight& weight);

// Integral of the radial weight over the scaled cross-section [-1,1]^2.
inline double scaled_volume(const RadialWeight& w) {
    return 4.0 * (1.0 + w.alpha * w.r_in) / w.alpha;
}

} // namespace spectherm
