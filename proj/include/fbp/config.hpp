#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fbp/kernels.hpp"

namespace fbp {

/// Flat key = value run configuration ('#' comments, one key per line).
/// Every key has a default; unknown keys are rejected.
struct RunConfig {
    std::string scenario = "quartic"; // quartic | wave
    double b = 1.0;
    double wave_c = kSqrt2;
    double wave_umax = 18.0 / kSqrt2;

    double T = 0.25;
    int M = 256;
    double A = 3.0;
    double damping = 1.0;
    double tol_fp = 1e-8;
    int max_iter = 100;
    bool adaptive_T = true;
    std::vector<double> snapshot_times; // empty -> {T/2, T}
    int workers = 0; // 0 = hardware

    // particle runs
    int n = 10000;
    double t_end = 0.25;
    std::uint64_t seed = 0;
    bool seed_set = false;

    /// snapshot_times, or the default {H/2, H} with H = T (solve) / t_end
    /// (particles) when none were given.
    std::vector<double> effective_snapshot_times(bool for_particles = false) const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Canonical key = value text that parses back to the same configuration
/// (snapshot times are resolved to their effective values).
std::string echo_config(const RunConfig& config, bool for_particles = false);

/// Validates ranges and the scenario name; throws ConfigError.  Snapshot
/// times are checked against T for solve runs, t_end for particle runs.
enum class RunKind { solve, particles };
void validate_config(const RunConfig& config, RunKind kind = RunKind::solve);

} // namespace fbp
