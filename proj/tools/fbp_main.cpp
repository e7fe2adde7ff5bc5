// fbp: one-phase Stefan-type free boundary solver (heat potentials +
// weakly singular Volterra equations + Picard fixed point) with a
// branching-Brownian particle simulator for cross-validation.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "fbp/config.hpp"
#include "fbp/density.hpp"
#include "fbp/errors.hpp"
#include "fbp/fixed_point.hpp"
#include "fbp/io.hpp"
#include "fbp/particle.hpp"

namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

fbp::InitialDatum make_datum(const fbp::RunConfig& cfg) {
    if (cfg.scenario == "wave") return fbp::make_wave_datum(cfg.b, cfg.wave_c, cfg.wave_umax);
    return fbp::make_initial_datum(cfg.b);
}

fbp::SolverConfig solver_config(const fbp::RunConfig& cfg) {
    fbp::SolverConfig sc;
    sc.b = cfg.b;
    sc.horizon = cfg.T;
    sc.grid_size = cfg.M;
    sc.lipschitz_budget = cfg.A;
    sc.damping = cfg.damping;
    sc.tol_fp = cfg.tol_fp;
    sc.max_iter = cfg.max_iter;
    sc.adaptive_horizon = cfg.adaptive_T;
    return sc;
}

int run_solve(const std::string& config_path, const std::string& out_dir) {
    const auto t0 = clock_type::now();
    fbp::RunConfig cfg = fbp::parse_config_file(config_path);
    fbp::validate_config(cfg, fbp::RunKind::solve);
    if (cfg.workers > 0) fbp::set_worker_count(cfg.workers);
    fs::create_directories(fs::path(out_dir) / "snapshots");

    const fbp::InitialDatum datum = make_datum(cfg);
    fbp::FbpSolution sol;
    try {
        sol = fbp::solve_fbp(solver_config(cfg), datum);
    } catch (const fbp::NoConvergenceError& e) {
        fbp::write_failure_report((fs::path(out_dir) / "report.json").string(), cfg,
                                  e.residual_history, e.what());
        std::cerr << "fbp solve: " << e.what() << "\n";
        return 2;
    }
    const double solve_seconds = seconds_since(t0);

    fbp::write_boundary_csv((fs::path(out_dir) / "boundary.csv").string(), sol.curve,
                            sol.field.q, sol.final_map);

    const auto tsnap = clock_type::now();
    std::vector<fbp::SnapshotDiagnostics> diags;
    for (double t : cfg.effective_snapshot_times()) {
        const fbp::DensitySnapshot snap = fbp::make_snapshot(sol.field, t);
        fbp::write_snapshot_csv(
            (fs::path(out_dir) / "snapshots" / ("rho_" + fbp::time_tag(t) + ".csv")).string(),
            snap);
        fbp::SnapshotDiagnostics d;
        d.t = t;
        d.mass = fbp::mass(sol.field, t);
        d.v_mass = fbp::v_mass(sol.field, t);
        d.boundary_slope = snap.boundary_slope;
        const double dt = sol.report.horizon_used / cfg.M;
        if (t > dt && t < sol.report.horizon_used - dt) {
            const auto stefan = fbp::stefan_velocity_check(sol.field, t);
            d.stefan_lhs = stefan.lhs;
            d.stefan_rhs = stefan.rhs;
        } else {
            d.stefan_lhs = d.stefan_rhs = 0.0;
        }
        diags.push_back(d);
    }
    const double snapshot_seconds = seconds_since(tsnap);

    fbp::OracleComparison oracle;
    if (cfg.scenario == "wave") {
        oracle.applicable = true;
        const fbp::TravelingWave wave = fbp::traveling_wave(cfg.wave_c);
        double sup_l = 0.0, sup_q = 0.0;
        for (std::size_t i = 0; i < sol.curve.grid.nodes.size(); ++i) {
            const double t = sol.curve.grid.nodes[i];
            sup_l = std::max(sup_l,
                             std::abs(sol.curve.values[i] - (cfg.b + cfg.wave_c * t)));
            sup_q = std::max(sup_q, std::abs(sol.field.q.values[i] -
                                             std::exp(-t) * wave.second_deriv(0.0)));
        }
        oracle.sup_boundary_error = sup_l;
        oracle.sup_q_error = sup_q;
    }

    fbp::PhaseTimings timings;
    timings.solve_seconds = solve_seconds;
    timings.snapshots_seconds = snapshot_seconds;
    timings.total_seconds = seconds_since(t0);
    fbp::write_solve_report((fs::path(out_dir) / "report.json").string(), cfg, sol.report,
                            diags, oracle, timings);
    return 0;
}

int run_particles(const std::string& config_path, const std::string& out_dir,
                  const std::string& pde_dir) {
    const auto t0 = clock_type::now();
    fbp::RunConfig cfg = fbp::parse_config_file(config_path);
    fbp::validate_config(cfg, fbp::RunKind::particles);
    if (cfg.workers > 0) fbp::set_worker_count(cfg.workers);
    const bool comparing = !pde_dir.empty();
    if (comparing && !cfg.seed_set)
        throw fbp::ConfigError("config: seed is required in comparison mode");
    std::uint64_t seed = cfg.seed;
    if (!cfg.seed_set) {
        seed = std::random_device{}();
        std::cerr << "fbp particles: auto-generated seed " << seed << "\n";
    }
    fs::create_directories(out_dir);

    const fbp::InitialDatum datum = make_datum(cfg);
    const auto times = cfg.effective_snapshot_times(true);
    const fbp::SimulationResult sim = fbp::simulate(cfg.n, datum, cfg.t_end, seed, times);
    for (const auto& m : sim.snapshots)
        fbp::write_particles_csv(
            (fs::path(out_dir) / ("particles_" + fbp::time_tag(m.t) + ".csv")).string(), m);

    std::vector<fbp::ComparisonRow> rows;
    if (comparing) {
        const fbp::RunConfig pde_cfg =
            fbp::read_config_echo((fs::path(pde_dir) / "report.json").string());
        const fbp::InitialDatum pde_datum = make_datum(pde_cfg);
        const fbp::FbpSolution pde = fbp::solve_fbp(solver_config(pde_cfg), pde_datum);
        rows = fbp::compare_to_pde(sim.snapshots, pde.field);
        fbp::write_comparison_csv((fs::path(out_dir) / "comparison.csv").string(), rows);
    }

    fbp::PhaseTimings timings;
    timings.particles_seconds = seconds_since(t0);
    timings.total_seconds = timings.particles_seconds;
    fbp::write_particles_report((fs::path(out_dir) / "report.json").string(), cfg, seed,
                                sim.n_branch_events, rows, timings);
    return 0;
}

int run_wave(double c, const std::string& out_dir) {
    const fbp::TravelingWave wave = fbp::traveling_wave(c);
    fs::create_directories(out_dir);
    // sample out to where the slower decay mode reaches ~1e-9
    const double decay = -wave.lam1;
    const double u_max = 21.0 / decay;
    fbp::write_wave_csv((fs::path(out_dir) / "wave.csv").string(), wave, u_max, 1024);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"free boundary solver for the Brunet-Derrida selection model"};
    app.require_subcommand(1);

    std::string config_path, out_dir, pde_dir;
    double wave_speed = fbp::kSqrt2;

    auto* solve = app.add_subcommand("solve", "run the free boundary solve");
    solve->add_option("--config", config_path, "configuration file")->required();
    solve->add_option("--out", out_dir, "output directory")->required();

    auto* particles = app.add_subcommand("particles", "run the particle simulation");
    particles->add_option("--config", config_path, "configuration file")->required();
    particles->add_option("--out", out_dir, "output directory")->required();
    particles->add_option("--pde", pde_dir, "prior solve output directory for comparison");

    auto* wave = app.add_subcommand("wave", "emit the closed-form traveling-wave fixture");
    wave->add_option("--c", wave_speed, "wave speed (>= sqrt 2)");
    wave->add_option("--out", out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(config_path, out_dir);
        if (particles->parsed()) return run_particles(config_path, out_dir, pde_dir);
        if (wave->parsed()) return run_wave(wave_speed, out_dir);
    } catch (const fbp::ConfigError& e) {
        std::cerr << "fbp: " << e.what() << "\n";
        return 1;
    } catch (const fbp::NoConvergenceError& e) {
        std::cerr << "fbp: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fbp: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
