#pragma once

#include <string>

#include "spectherm/assembly.hpp"
#include "spectherm/dynamics.hpp"

namespace spectherm {

// One self-contained run configuration. File format is INI-style:
// sections [geometry], [props], [face.<name>] x4, [solver]; '#' comments.
struct Scenario {
    CellGeometry geometry;
    ThermalProps props;
    FaceSet faces;
    int n_r = 2;
    int n_z = 2;
    double dt = 1.0;       // s
    double T_init = 18.0;  // degC
    std::string profile;   // optional path, relative to the scenario file

    bool operator==(const Scenario&) const = default;
};

Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario_file(const std::string& path);
std::string serialize_scenario(const Scenario& s);

// Two-column CSV, header `t_s,q_W_per_m3`, or `t_s,P_W` with total power
// converted through the annular cell volume.
LoadProfile parse_profile_text(const std::string& text, const CellGeometry& geometry);
LoadProfile parse_profile_file(const std::string& path, const CellGeometry& geometry);

// Resolves a profile reference relative to the scenario file's directory.
std::string resolve_relative(const std::string& base_file, const std::string& ref);

} // namespace spectherm
