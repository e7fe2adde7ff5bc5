#pragma once

#include <string>
#include <vector>

#include "fbp/config.hpp"
#include "fbp/density.hpp"
#include "fbp/fixed_point.hpp"
#include "fbp/particle.hpp"

namespace fbp {

/// 17-significant-digit (round-trip) decimal form of a double.
std::string format_g17(double x);

/// CSV writers; numbers at full round-trip precision, headers fixed.
void write_boundary_csv(const std::string& path, const BoundaryCurve& curve,
                        const GridFunction& q, const BoundaryCurve& image);
void write_snapshot_csv(const std::string& path, const DensitySnapshot& snapshot);
void write_particles_csv(const std::string& path, const EmpiricalMeasure& measure);
void write_comparison_csv(const std::string& path, const std::vector<ComparisonRow>& rows);
void write_wave_csv(const std::string& path, const TravelingWave& wave, double u_max,
                    int samples);

/// Tag used in snapshot/particle file names (rho_<t>.csv).
std::string time_tag(double t);

struct SnapshotDiagnostics {
    double t;
    double mass;
    double v_mass;
    double boundary_slope;
    double stefan_lhs;
    double stefan_rhs;
};

struct PhaseTimings {
    double solve_seconds = 0.0;
    double snapshots_seconds = 0.0;
    double particles_seconds = 0.0;
    double total_seconds = 0.0;
};

struct OracleComparison {
    bool applicable = false;
    double sup_boundary_error = 0.0; // sup_t |L_t - (b + c t)|
    double sup_q_error = 0.0;        // sup_t |q(t) - e^{-t} w''(0)|
};

/// report.json for a solve run (config echo, fixed-point report, per-time
/// diagnostics, oracle comparisons, timings).
void write_solve_report(const std::string& path, const RunConfig& config,
                        const FixedPointReport& report,
                        const std::vector<SnapshotDiagnostics>& diagnostics,
                        const OracleComparison& oracle, const PhaseTimings& timings);

/// report.json for a no-convergence exit (residual history preserved).
void write_failure_report(const std::string& path, const RunConfig& config,
                          const std::vector<double>& residual_history,
                          const std::string& message);

/// report.json for a particle run.
void write_particles_report(const std::string& path, const RunConfig& config,
                            std::uint64_t seed_used, long long branch_events,
                            const std::vector<ComparisonRow>& comparison,
                            const PhaseTimings& timings);

/// Reads the "config_echo" field back out of a solve report.
RunConfig read_config_echo(const std::string& report_path);

} // namespace fbp
