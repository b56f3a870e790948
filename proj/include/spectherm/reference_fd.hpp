#pragma once

#include <Eigen/Dense>

#include "spectherm/assembly.hpp"
#include "spectherm/dynamics.hpp"

namespace spectherm {

// Conservative vertex-centred finite-volume grid on [r_in,r_out] x [0,H].
// Boundary nodes sit on the faces with half control volumes, so the discrete
// steady state balances generation against convective loss exactly.
struct FdGrid {
    Eigen::VectorXd r; // m, inclusive of both radii
    Eigen::VectorXd z; // m, inclusive of 0 and H
    Eigen::MatrixXd T; // degC, n_r x n_z
    int n_r = 0, n_z = 0;
};

inline constexpr int kFdDefaultNr = 141;
inline constexpr int kFdDefaultNz = 71;

FdGrid fd_solve_steady(const CellGeometry& geometry, const ThermalProps& props,
                       const FaceSet& faces, double q, int n_r, int n_z);

// Implicit (backward Euler) marching with the load sampled at each step's
// left edge; outputs are the four probe temperatures plus the volume-weighted
// mean, matching the spectral model's output schema. When final_field is
// non-null it receives the last temperature field.
SimulationResult fd_solve_transient(const CellGeometry& geometry, const ThermalProps& props,
                                    const FaceSet& faces, const LoadProfile& profile,
                                    int n_r, int n_z, double dt,
                                    double T_init, FdGrid* final_field = nullptr);

// Bilinear interpolation on the tensor grid; throws std::domain_error for
// points outside the cross-section.
double fd_interpolate(const FdGrid& grid, double r, double z);

// Relative steady energy-balance residual |q V - convective loss| / (q V).
double fd_energy_balance(const CellGeometry& geometry, const ThermalProps& props,
                         const FaceSet& faces, const FdGrid& grid, double q);

} // namespace spectherm
