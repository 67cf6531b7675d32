#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slowlight {

/// Error in a scenario configuration document; carries the offending line
/// (0 when the problem is not tied to a single line).
class config_error : public std::runtime_error {
  public:
    config_error(std::string message, std::size_t line = 0)
        : std::runtime_error(std::move(message)), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

enum class Scenario {
    fig1a,
    fig1b,
    fig2,
    fig3,
    custom_reflectance,
    custom_sweep,
    eit_estimate,
};

std::string_view scenario_name(Scenario s);

struct LogRange {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n = 0;
};

struct LinRange {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n = 0;
};

/// Parsed and validated scenario configuration. Frequencies are angular
/// (rad/s); vg values are dimensionless vg/c; densities are m^-3.
struct ScenarioConfig {
    Scenario scenario = Scenario::fig2;

    // medium
    double n0 = 1.0;
    double omega0 = 0.0;
    std::optional<double> alpha;       ///< exactly one of alpha / vg_over_c
    std::optional<double> vg_over_c;   ///< for single-model scenarios

    // packet
    double delta_omega = 0.0;
    double halfwidth = 8.0;
    std::size_t count = 16384;

    // sweeps / grids
    std::vector<double> vg_list;            ///< vg/c values, ascending
    std::optional<LogRange> vg_log_range;   ///< vg/c log-spaced range
    std::optional<LinRange> detuning_range; ///< scaled detuning (w-w0)/w0
    std::optional<LinRange> freq_range;     ///< scaled frequency w/w0

    // EIT estimate
    double density = 0.0;     ///< m^-3
    double wavelength = 0.0;  ///< m
    double gamma = 1.0e7;     ///< rad/s
    double rabi = 1.0e7;      ///< rad/s

    std::string out;  ///< output path; empty means stdout

    /// Raw key/value text in input order, echoed into the run manifest.
    std::vector<std::pair<std::string, std::string>> echo;
};

/// Parses a `key = value` document ('#' starts a comment, one pair per line)
/// and validates it for the declared scenario. Unknown keys, duplicate keys,
/// malformed numbers, missing required keys, and the alpha/vg_over_c mutual
/// exclusion all raise config_error with the offending line number.
ScenarioConfig parse_config(std::string_view text);

}  // namespace slowlight
