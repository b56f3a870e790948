#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spectherm/lifting.hpp"
#include "spectherm/robin_basis.hpp"

namespace spectherm {

// Hollow cylinder (jelly roll with open core); r_in = 0 is rejected.
struct CellGeometry {
    double r_in = 0.0;   // m
    double r_out = 0.0;  // m
    double height = 0.0; // m
    void validate() const; // throws SchemaError
    double cell_volume() const; // m^3
    bool operator==(const CellGeometry&) const = default;
};

struct ThermalProps {
    double rho = 0.0; // kg m^-3
    double cp = 0.0;  // J kg^-1 K^-1
    double k_r = 0.0; // W m^-1 K^-1
    double k_z = 0.0; // W m^-1 K^-1
    void validate() const; // throws SchemaError
    bool operator==(const ThermalProps&) const = default;
};

struct FaceCondition {
    double h = 0.0;     // W m^-2 K^-1, >= 0
    double T_inf = 0.0; // degC
    bool operator==(const FaceCondition&) const = default;
};

struct FaceSet {
    FaceCondition radial_inner; // r = r_in
    FaceCondition radial_outer; // r = r_out
    FaceCondition axial_low;    // z = 0
    FaceCondition axial_high;   // z = H
    void validate() const; // throws SchemaError
    bool any_convective() const;
    bool operator==(const FaceSet&) const = default;
};

// Affine maps between (r,z) and the unit square coordinates (rhat,zhat).
struct Scaling {
    double alpha = 0.0; // 2/(r_out - r_in)
    double beta = 0.0;  // 2/H
    double r_in = 0.0;
    double rhat(double r) const { return alpha * (r - r_in) - 1.0; }
    double r(double rhat) const { return (1.0 + rhat) / alpha + r_in; }
    double zhat(double z) const { return beta * z - 1.0; }
    double z(double zhat) const { return (1.0 + zhat) / beta; }
    RadialWeight weight() const { return RadialWeight{alpha, r_in}; }
};

Scaling scale_problem(const CellGeometry& geometry);

// Scaled Robin constants for all four faces. Signs follow the outward
// normal: a_plus = h/k_r at r_out, a_minus = -h/k_r at r_in, and likewise
// c_plus/c_minus axially; b = alpha and d = beta.
BcConstants bc_constants(const ThermalProps& props, const FaceSet& faces,
                         double alpha, double beta);

// Descriptor system E xdot = A x + B u with u = [q, second_input]:
//   2-D cylinder: u = [q, 1], y = C x + Te_out (5 outputs)
//   1-D slab:     u = [q, T_inf], y = C x + D u (2 endpoint outputs)
struct StateSpaceModel {
    Eigen::MatrixXd E, A, B, C, D;
    Eigen::VectorXd Te_out;
    double second_input = 1.0;
    int n_r = 0, n_z = 1;
    Scaling scaling;
    CellGeometry geometry;
    ThermalProps props;
    FaceSet faces;
    std::optional<LiftingField> lifting;   // 2-D model only
    std::optional<RobinBasis> slab_basis;  // 1-D model only
    std::vector<std::string> warnings;
    bool all_adiabatic = false;

    int state_count() const { return static_cast<int>(E.rows()); }
    int output_count() const { return static_cast<int>(C.rows()); }
};

// State ordering: flat index = k + j n_r for radial mode k, axial mode j.
inline int state_index(int k, int j, int n_r) { return k + j * n_r; }
inline std::pair<int, int> state_unindex(int idx, int n_r) {
    return {idx % n_r, idx / n_r};
}

StateSpaceModel assemble_2d(const CellGeometry& geometry, const ThermalProps& props,
                            const FaceSet& faces, int n_r, int n_z);

// Slab on [-1,1] with symmetric convection h toward T_inf at both ends.
StateSpaceModel build_1d_model(double k, double rho, double cp,
                               double h, double T_inf, int n);

// P [W] to volumetric q [W m^-3] over the annular cell volume.
double power_to_volumetric(double power_w, const CellGeometry& geometry);

} // namespace spectherm
