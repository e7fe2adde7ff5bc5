#include "fbp/particle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace fbp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::size_t leftmost_index(const std::vector<double>& positions) {
    std::size_t m = 0;
    for (std::size_t i = 1; i < positions.size(); ++i)
        if (positions[i] < positions[m]) m = i; // ties keep the smallest index
    return m;
}

} // namespace

SimulationResult simulate(int n, const InitialDatum& datum, double t_end,
                          std::uint64_t seed, std::span<const double> snapshot_times,
                          const ParticleOptions& opts) {
    if (n < 2) throw std::domain_error("simulate: need at least 2 particles");
    if (!(t_end > 0.0)) throw std::domain_error("simulate: t_end must be positive");
    std::vector<double> times(snapshot_times.begin(), snapshot_times.end());
    std::sort(times.begin(), times.end());
    for (double t : times)
        if (t < 0.0 || t > t_end + 1e-12)
            throw std::domain_error("simulate: snapshot times must lie in [0, t_end]");

    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::exponential_distribution<double> expo{double(n)};
    std::uniform_int_distribution<int> pick(0, n - 1);

    const DensityCdf cdf0 = make_initial_cdf(datum);
    std::vector<double> positions(n);
    for (int i = 0; i < n; ++i) positions[i] = cdf0.quantile(unif(rng));

    SimulationResult result;
    auto record = [&](double t) {
        EmpiricalMeasure m;
        m.t = t;
        m.sorted_positions = positions;
        std::sort(m.sorted_positions.begin(), m.sorted_positions.end());
        result.snapshots.push_back(std::move(m));
    };
    auto advance = [&](double dt) {
        if (dt <= 0.0) return;
        const double sigma = std::sqrt(dt);
        for (double& p : positions) p += sigma * gauss(rng);
    };

    double now = 0.0;
    std::size_t snap_idx = 0;
    while (snap_idx < times.size() && times[snap_idx] <= 0.0) record(0.0), ++snap_idx;

    double event_time = opts.disable_branching
                            ? std::numeric_limits<double>::infinity()
                            : now + expo(rng);
    for (;;) {
        const double next_snap =
            (snap_idx < times.size()) ? times[snap_idx] : std::numeric_limits<double>::infinity();
        if (event_time < std::min(next_snap, t_end)) {
            advance(event_time - now);
            now = event_time;
            const int father = pick(rng);
            const std::size_t dead = leftmost_index(positions);
            positions[dead] = positions[father]; // duplicate + simultaneous kill
            ++result.n_branch_events;
            event_time = now + expo(rng);
        } else if (next_snap <= t_end) {
            advance(next_snap - now);
            now = next_snap;
            record(now);
            ++snap_idx;
        } else {
            advance(t_end - now);
            now = t_end;
            break;
        }
    }
    return result;
}

std::vector<SimulationResult> run_replicas(int replicas, int n, const InitialDatum& datum,
                                           double t_end, std::uint64_t seed,
                                           std::span<const double> snapshot_times,
                                           const ParticleOptions& opts, ExecPolicy policy) {
    std::vector<SimulationResult> out(replicas);
    if (policy == ExecPolicy::parallel) {
#ifdef _OPENMP
        const int nw = worker_count();
#pragma omp parallel for schedule(dynamic) num_threads(nw)
#endif
        for (int r = 0; r < replicas; ++r)
            out[r] = simulate(n, datum, t_end, splitmix64(seed + 0x51ed2701ULL * (r + 1)),
                              snapshot_times, opts);
    } else {
        for (int r = 0; r < replicas; ++r)
            out[r] = simulate(n, datum, t_end, splitmix64(seed + 0x51ed2701ULL * (r + 1)),
                              snapshot_times, opts);
    }
    return out;
}

double empirical_cdf(const EmpiricalMeasure& measure, double x) {
    const auto& s = measure.sorted_positions;
    return double(std::upper_bound(s.begin(), s.end(), x) - s.begin()) / double(s.size());
}

double ks_statistic(std::span<const double> sorted_sample, const DensityCdf& cdf) {
    const std::size_t n = sorted_sample.size();
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted_sample[i]);
        d = std::max(d, std::max(std::abs(f - double(i) / n), std::abs(double(i + 1) / n - f)));
    }
    return d;
}

std::vector<ComparisonRow> compare_to_pde(std::span<const EmpiricalMeasure> measures,
                                          const FieldSolution& field) {
    std::vector<ComparisonRow> rows;
    rows.reserve(measures.size());
    for (const auto& m : measures) {
        if (m.t > field.curve.grid.horizon() + 1e-12)
            throw std::domain_error("compare_to_pde: snapshot beyond the field horizon");
        DensityCdf cdf;
        double boundary;
        if (m.t <= 0.0) {
            cdf = make_initial_cdf(field.datum);
            boundary = field.datum.b;
        } else {
            cdf = make_cdf(make_snapshot(field, m.t, 1024));
            boundary = field.curve(m.t);
        }
        rows.push_back({m.t, ks_statistic(m.sorted_positions, cdf), m.leftmost(), boundary});
    }
    return rows;
}

std::vector<double> sample_from_cdf(const DensityCdf& cdf, int n, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = cdf.quantile(unif(rng));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fbp
