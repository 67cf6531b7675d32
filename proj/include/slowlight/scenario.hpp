#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slowlight/config.hpp"
#include "slowlight/dispersion.hpp"
#include "slowlight/wavepacket.hpp"

namespace slowlight {

inline constexpr const char* tool_version = "0.1.0";

/// Derived quantities for one medium used by a run, recomputed from the
/// dispersion operations at emission time (never copied from the input).
struct ManifestModel {
    double vg_over_c;
    double alpha;
    double omega_c;
    std::optional<double> r;  ///< present when the run has a packet width
};

struct ManifestGrid {
    std::size_t count;
    double halfwidth;
    double truncated_energy_fraction;  ///< analytic |A|^2 weight outside the grid
};

struct RunManifest {
    std::string version;
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::vector<ManifestModel> models;  ///< endpoints for sweeps, all models otherwise
    std::optional<ManifestGrid> grid;
    std::optional<EitEstimate> eit;

    std::string to_json() const;  ///< stable field order, deterministic bytes
};

struct RunResult {
    std::string csv;  ///< comma-separated, header row, '\n' endings
    RunManifest manifest;
};

/// Executes a scenario. The CSV is byte-deterministic for a fixed config:
/// floats print as %.16e (17 significant digits), rows are emitted in input
/// order regardless of `threads` (workers only fan out independent sweep
/// rows). Numeric domain failures surface as std::domain_error naming the
/// offending parameter.
RunResult run_scenario(const ScenarioConfig& cfg, int threads = 1);

/// Spectra and time series in the same CSV conventions as the scenarios
/// (header row, %.16e floats, '\n' endings).
std::string to_csv(const Spectrum& spec);
std::string to_csv(const TimeSeries& series);

}  // namespace slowlight
