#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fbp/density.hpp"
#include "fbp/initial_datum.hpp"
#include "fbp/parallel.hpp"

namespace fbp {

/// Test instrumentation: pure diffusion (no branch/kill events).
struct ParticleOptions {
    bool disable_branching = false;
};

/// Snapshot of the N-particle system at a fixed time.
struct EmpiricalMeasure {
    double t = 0.0;
    std::vector<double> sorted_positions;
    double leftmost() const { return sorted_positions.front(); }
};

struct SimulationResult {
    std::vector<EmpiricalMeasure> snapshots;
    long long n_branch_events = 0;
};

/// Event-driven N-BBM: n Brownian particles (unit diffusion, generator
/// (1/2) d^2/dx^2), branch events at exponential(n) waiting times; at each
/// event a uniformly chosen particle is duplicated in place and the leftmost
/// particle (smallest index among exact ties) is removed, keeping the
/// population at n.  Initial positions are i.i.d. inverse-CDF samples from
/// rho0.  Fully deterministic given the seed.
SimulationResult simulate(int n, const InitialDatum& datum, double t_end,
                          std::uint64_t seed, std::span<const double> snapshot_times,
                          const ParticleOptions& opts = {});

/// Independent replicas with decorrelated per-replica streams; the parallel
/// path gives results identical to the serial one (replica r depends only on
/// seed and r).
std::vector<SimulationResult> run_replicas(int replicas, int n, const InitialDatum& datum,
                                           double t_end, std::uint64_t seed,
                                           std::span<const double> snapshot_times,
                                           const ParticleOptions& opts = {},
                                           ExecPolicy policy = ExecPolicy::parallel);

/// Fraction of particles <= x (right-continuous step function).
double empirical_cdf(const EmpiricalMeasure& measure, double x);

/// Kolmogorov-Smirnov statistic of a sorted sample against a CDF.
double ks_statistic(std::span<const double> sorted_sample, const DensityCdf& cdf);

struct ComparisonRow {
    double t;
    double ks_distance;
    double leftmost;
    double boundary; // L_t
};

/// Per-snapshot KS distance against the PDE density plus |leftmost - L_t|
/// raw ingredients.  Snapshot times must lie within the field's horizon;
/// t = 0 compares against the initial datum.
std::vector<ComparisonRow> compare_to_pde(std::span<const EmpiricalMeasure> measures,
                                          const FieldSolution& field);

/// n inverse-CDF samples (sorted) from a density CDF; the direct-sampling
/// calibration control of the cross-check.
std::vector<double> sample_from_cdf(const DensityCdf& cdf, int n, std::uint64_t seed);

} // namespace fbp
