#pragma once

#include <string>
#include <vector>

namespace spectherm {

struct RunOptions {
    std::string scenario_path;
    std::string profile_path; // overrides the scenario's profile reference
    std::string out_dir = ".";
    std::vector<int> orders;  // freqsweep state counts; empty -> {1,4,9,25}
    double dt = 0;            // s; 0 -> scenario value
    int grid_nr = 0;          // validate oracle grid; 0 -> defaults
    int grid_nz = 0;
    bool no_plots = false;
};

// Probe-trajectory comparisons against the oracle skip this initial window:
// the low-order weighted projection of a uniform start needs a few seconds
// to relax onto the trajectory the oracle resolves pointwise.
inline constexpr double kValidateSkipSeconds = 10.0;

// Each returns a process exit code: 0 success, 4 validation failure.
// Schema and numeric errors propagate as exceptions for the CLI to map.
int run_simulate(const RunOptions& opts);
int run_freqsweep(const RunOptions& opts);
int run_validate(const RunOptions& opts);
int run_export_model(const RunOptions& opts);

} // namespace spectherm
