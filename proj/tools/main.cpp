#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectherm/errors.hpp"
#include "spectherm/runner.hpp"

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitNumeric = 3;

int parse_grid(const std::string& text, spectherm::RunOptions& opts) {
    int nr = 0, nz = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%dx%d%c", &nr, &nz, &extra) != 2 || nr < 3 || nz < 3)
        throw spectherm::SchemaError("--grid expects NRxNZ with both >= 3, got '" + text + "'");
    opts.grid_nr = nr;
    opts.grid_nz = nz;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral-Galerkin thermal model for cylindrical cells"};
    app.require_subcommand(1);

    spectherm::RunOptions opts;
    std::string grid_text;

    auto add_common = [&](CLI::App* cmd, bool needs_profile_flag) {
        cmd->add_option("--scenario", opts.scenario_path, "scenario config file")
            ->required();
        cmd->add_option("--out", opts.out_dir, "output directory (default .)");
        cmd->add_option("--dt", opts.dt, "time step override in seconds");
        if (needs_profile_flag)
            cmd->add_option("--profile", opts.profile_path,
                            "load profile CSV (overrides the scenario's reference)");
    };

    CLI::App* sim = app.add_subcommand("simulate", "run a transient and write outputs.csv");
    add_common(sim, true);
    sim->add_flag("--no-plots", opts.no_plots, "skip SVG plot emission");

    CLI::App* sweep = app.add_subcommand(
        "freqsweep", "heat-input frequency response of reduced orders vs an Ns=225 baseline");
    add_common(sweep, false);
    sweep->add_option("--orders", opts.orders, "state counts to sweep (default 1,4,9,25)")
        ->delimiter(',');
    sweep->add_flag("--no-plots", opts.no_plots, "skip SVG plot emission");

    CLI::App* val = app.add_subcommand(
        "validate", "compare Ns=4 and Ns=9 models against the finite-volume oracle");
    add_common(val, true);
    val->add_option("--grid", grid_text, "oracle grid as NRxNZ (default 141x71)");

    CLI::App* exp = app.add_subcommand("export-model",
                                       "write E/A/B/C and Te_out as CSV matrices");
    add_common(exp, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitSchema;
    }

    try {
        if (!grid_text.empty()) parse_grid(grid_text, opts);
        if (sim->parsed()) return spectherm::run_simulate(opts);
        if (sweep->parsed()) return spectherm::run_freqsweep(opts);
        if (val->parsed()) return spectherm::run_validate(opts);
        if (exp->parsed()) return spectherm::run_export_model(opts);
    } catch (const spectherm::SchemaError& e) {
        std::fprintf(stderr, "schema error: %s\n", e.what());
        return kExitSchema;
    } catch (const spectherm::NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    }
    return 0;
}
