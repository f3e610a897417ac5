#pragma once

#include <string>
#include <vector>

#include "csdo/model.hpp"
#include "csdo/spectra.hpp"

/// Command-line front end: config ingestion, parameter sweeps, CSV/JSON
/// emission and analytic-vs-oracle comparison reports. All output is byte
/// deterministic: numbers are shortest-round-trip decimals, there are no
/// timestamps, and rows are sort-normalized.
namespace csdo::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
    double mass = 1.0;
    double omega0 = 0.0;
    double omega = 0.0;
    double eta = 1.0;
    int n_max = 0;
    int l_min = 0;
    int l_max = 0;
    std::vector<int> spins = {-1, 1};
    SpectrumModel model = SpectrumModel::unconfined;
    OutputFormat format = OutputFormat::csv;
    bool skip_nonphysical = false;
    int oracle_grid = 2000;
    double grid_tolerance = 1e-4;
    int count = -1;    // compare: levels per (l, s); -1 means n_max + 1
    int samples = 512; // wavefunction: number of grid points

    /// Throws ConfigError when the physical block is invalid.
    PhysicalConfig physical() const;
    /// Throws ConfigError when the sweep/oracle block is invalid.
    void validate() const;
};

/// Reads a JSON object whose keys mirror RunConfig in lower_snake_case.
/// Unknown keys are rejected. Throws ConfigError on any problem.
RunConfig load_config_file(const std::string& path);

std::string cmd_spectrum(const RunConfig& run);
std::string cmd_compare(const RunConfig& run);
std::string cmd_wavefunction(const RunConfig& run, int n, int l, int spin);
std::string cmd_regimes(const RunConfig& run);

/// Full argument parsing and dispatch. Exit codes: 0 success, 2 usage or
/// configuration error, 3 nonphysical parameters under the strict policy,
/// 4 oracle failed to converge. Diagnostics go to stderr, payload to stdout.
int run_main(int argc, const char* const* argv);

} // namespace csdo::cli
