#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spectherm/assembly.hpp"

namespace spectherm {

// Piecewise-constant volumetric heat load. q(t) = q_i on [t_i, t_{i+1});
// the last breakpoint both holds its value and sets the profile duration.
struct LoadProfile {
    std::vector<double> times; // s, strictly increasing from 0
    std::vector<double> q;     // W m^-3

    double duration() const { return times.empty() ? 0.0 : times.back(); }
    double value_at(double t) const;
    void validate() const; // throws SchemaError

    static LoadProfile constant(double q, double duration_s);
};

struct SimulationResult {
    std::vector<double> times;        // s, starting at 0
    Eigen::MatrixXd outputs;          // output_count x times
    Eigen::VectorXd final_state;
    std::optional<Eigen::MatrixXd> states; // state_count x times when requested
};

// Exact zero-order-hold marching: per step x+ = Phi x + Gamma u with
// [Phi, Gamma; 0, I] = exp([E^-1 A, E^-1 B; 0, 0] dt), which covers the
// singular all-adiabatic case. A trailing partial step uses its own
// exponential so the final sample lands exactly on the profile duration.
SimulationResult simulate(const StateSpaceModel& model, const LoadProfile& profile,
                          double dt, double T_init, bool keep_states = false);

// Weighted-least-squares fit of T_init minus the lifting (2-D) or minus the
// ambient passthrough (1-D slab): x0 = G^-1 <T_init - T_e, psi_i>_w.
Eigen::VectorXd project_initial_condition(const StateSpaceModel& model, double T_init);

// Field-function variant; the callable receives physical (r, z) in metres
// for the 2-D model and (x, 0) with x in [-1,1] for the 1-D slab.
Eigen::VectorXd project_initial_condition(
    const StateSpaceModel& model, const std::function<double(double, double)>& T_init);

// Temperatures at physical points inside the annulus cross-section.
std::vector<double> reconstruct_field(const StateSpaceModel& model,
                                      const Eigen::VectorXd& state,
                                      const std::vector<std::pair<double, double>>& points_rz);

// H(s) = C (sE - A)^-1 B restricted to the q input and one output (1-based),
// at s = 2 pi i f. Model access is read-only; safe to call concurrently.
std::vector<std::complex<double>> frequency_response(const StateSpaceModel& model,
                                                     const std::vector<double>& f_hz,
                                                     int output_index);

double biot_number(const ThermalProps& props, const CellGeometry& geometry, double h);

} // namespace spectherm
