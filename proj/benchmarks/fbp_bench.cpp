// Timing harness comparing the serial reference kernels with the OpenMP
// paths: spatial field evaluation and Monte Carlo replicas.

#include <chrono>
#include <cstdio>
#include <vector>

#include "fbp/density.hpp"
#include "fbp/fixed_point.hpp"
#include "fbp/particle.hpp"

using clock_type = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& fn) {
    const auto t0 = clock_type::now();
    fn();
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

} // namespace

int main() {
    using namespace fbp;

    std::printf("setting up wave scenario (M = 256, T = 0.25)...\n");
    const InitialDatum datum = make_wave_datum(1.0, kSqrt2);
    SolverConfig config;
    config.b = 1.0;
    const double solve_s = time_of([&] { (void)solve_fbp(config, datum); });
    const FbpSolution sol = solve_fbp(config, datum);
    std::printf("  fixed-point solve: %.3f s (%d iterations)\n", solve_s, sol.report.iterates);

    // spatial snapshot evaluation, serial reference vs OpenMP
    const int nodes = 2048;
    double serial_s = 0.0, parallel_s = 0.0;
    {
        DensitySnapshot s1, s2;
        serial_s = time_of([&] { s1 = make_snapshot(sol.field, 0.125, nodes, ExecPolicy::serial); });
        parallel_s =
            time_of([&] { s2 = make_snapshot(sol.field, 0.125, nodes, ExecPolicy::parallel); });
        double max_diff = 0.0;
        for (int i = 0; i < nodes; ++i)
            max_diff = std::max(max_diff, std::abs(s1.v_values[i] - s2.v_values[i]));
        std::printf("snapshot evaluation (%d nodes): serial %.3f s, parallel %.3f s, "
                    "speedup %.2fx, max |diff| %.1e\n",
                    nodes, serial_s, parallel_s, serial_s / parallel_s, max_diff);
    }

    // Monte Carlo replicas, serial vs OpenMP
    {
        const int replicas = 16, n = 2000;
        const double times[] = {0.25};
        std::vector<SimulationResult> r1, r2;
        const double rs = time_of([&] {
            r1 = run_replicas(replicas, n, datum, 0.25, 42, times, {}, ExecPolicy::serial);
        });
        const double rp = time_of([&] {
            r2 = run_replicas(replicas, n, datum, 0.25, 42, times, {}, ExecPolicy::parallel);
        });
        double max_diff = 0.0;
        for (int r = 0; r < replicas; ++r)
            for (std::size_t i = 0; i < r1[r].snapshots[0].sorted_positions.size(); ++i)
                max_diff = std::max(max_diff,
                                    std::abs(r1[r].snapshots[0].sorted_positions[i] -
                                             r2[r].snapshots[0].sorted_positions[i]));
        std::printf("particle replicas (%d x %d): serial %.3f s, parallel %.3f s, "
                    "speedup %.2fx, max |diff| %.1e\n",
                    replicas, n, rs, rp, rs / rp, max_diff);
    }
    return 0;
}
