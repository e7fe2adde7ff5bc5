#include "fbp/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "fbp/errors.hpp"

namespace fbp {

using nlohmann::json;

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

json report_to_json(const FixedPointReport& r) {
    return json{{"iterates", r.iterates},
                {"final_residual", r.final_residual},
                {"residual_history", r.residual_history},
                {"contraction_ratios", r.contraction_ratios},
                {"lipschitz_seminorm", r.lipschitz_seminorm},
                {"horizon_used", r.horizon_used},
                {"horizon_halvings", r.horizon_halvings},
                {"converged", r.converged},
                {"damping_used", r.damping_used},
                {"gronwall_bound", r.gronwall_bound},
                {"sup_q", r.sup_q},
                {"second_difference_bound", r.second_difference_bound},
                {"warnings", r.warnings}};
}

json config_to_json(const RunConfig& c, bool for_particles) {
    return json{{"scenario", c.scenario},
                {"b", c.b},
                {"wave_c", c.wave_c},
                {"wave_umax", c.wave_umax},
                {"T", c.T},
                {"M", c.M},
                {"A", c.A},
                {"damping", c.damping},
                {"tol_fp", c.tol_fp},
                {"max_iter", c.max_iter},
                {"adaptive_T", c.adaptive_T},
                {"workers", c.workers},
                {"n", c.n},
                {"t_end", c.t_end},
                {"seed", c.seed},
                {"seed_set", c.seed_set},
                {"snapshot_times", c.effective_snapshot_times(for_particles)}};
}

} // namespace

std::string time_tag(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

void write_boundary_csv(const std::string& path, const BoundaryCurve& curve,
                        const GridFunction& q, const BoundaryCurve& image) {
    auto out = open_out(path);
    out << "t,L,q,K_residual\n";
    for (std::size_t i = 0; i < curve.grid.nodes.size(); ++i) {
        out << format_g17(curve.grid.nodes[i]) << ',' << format_g17(curve.values[i]) << ','
            << format_g17(q.values[i]) << ','
            << format_g17(image.values[i] - curve.values[i]) << '\n';
    }
}

void write_snapshot_csv(const std::string& path, const DensitySnapshot& snapshot) {
    auto out = open_out(path);
    out << "x,rho,v\n";
    for (std::size_t i = 0; i < snapshot.x_nodes.size(); ++i) {
        out << format_g17(snapshot.x_nodes[i]) << ',' << format_g17(snapshot.rho_values[i])
            << ',' << format_g17(snapshot.v_values[i]) << '\n';
    }
}

void write_particles_csv(const std::string& path, const EmpiricalMeasure& measure) {
    auto out = open_out(path);
    out << "x\n";
    for (double p : measure.sorted_positions) out << format_g17(p) << '\n';
}

void write_comparison_csv(const std::string& path, const std::vector<ComparisonRow>& rows) {
    auto out = open_out(path);
    out << "t,ks_distance,leftmost,L_t\n";
    for (const auto& r : rows)
        out << format_g17(r.t) << ',' << format_g17(r.ks_distance) << ','
            << format_g17(r.leftmost) << ',' << format_g17(r.boundary) << '\n';
}

void write_wave_csv(const std::string& path, const TravelingWave& wave, double u_max,
                    int samples) {
    auto out = open_out(path);
    out << "u,w,dw,d2w\n";
    for (int i = 0; i <= samples; ++i) {
        const double u = u_max * i / samples;
        out << format_g17(u) << ',' << format_g17(wave.value(u)) << ','
            << format_g17(wave.deriv(u)) << ',' << format_g17(wave.second_deriv(u)) << '\n';
    }
}

void write_solve_report(const std::string& path, const RunConfig& config,
                        const FixedPointReport& report,
                        const std::vector<SnapshotDiagnostics>& diagnostics,
                        const OracleComparison& oracle, const PhaseTimings& timings) {
    json j;
    j["config_echo"] = config_to_json(config, false);
    j["fixed_point"] = report_to_json(report);
    j["diagnostics"] = json::array();
    for (const auto& d : diagnostics)
        j["diagnostics"].push_back(json{{"t", d.t},
                                        {"mass", d.mass},
                                        {"v_mass", d.v_mass},
                                        {"boundary_slope", d.boundary_slope},
                                        {"stefan_lhs", d.stefan_lhs},
                                        {"stefan_rhs", d.stefan_rhs}});
    if (oracle.applicable)
        j["oracle"] = json{{"sup_boundary_error", oracle.sup_boundary_error},
                           {"sup_q_error", oracle.sup_q_error}};
    j["timings"] = json{{"solve_seconds", timings.solve_seconds},
                        {"snapshots_seconds", timings.snapshots_seconds},
                        {"total_seconds", timings.total_seconds}};
    open_out(path) << j.dump(2) << '\n';
}

void write_failure_report(const std::string& path, const RunConfig& config,
                          const std::vector<double>& residual_history,
                          const std::string& message) {
    json j;
    j["config_echo"] = config_to_json(config, false);
    j["error"] = message;
    j["residual_history"] = residual_history;
    open_out(path) << j.dump(2) << '\n';
}

void write_particles_report(const std::string& path, const RunConfig& config,
                            std::uint64_t seed_used, long long branch_events,
                            const std::vector<ComparisonRow>& comparison,
                            const PhaseTimings& timings) {
    json j;
    j["config_echo"] = config_to_json(config, true);
    j["config_echo"]["seed"] = seed_used;
    j["config_echo"]["seed_set"] = true;
    j["branch_events"] = branch_events;
    j["comparison"] = json::array();
    for (const auto& r : comparison)
        j["comparison"].push_back(json{{"t", r.t},
                                       {"ks_distance", r.ks_distance},
                                       {"leftmost", r.leftmost},
                                       {"L_t", r.boundary}});
    j["timings"] = json{{"particles_seconds", timings.particles_seconds},
                        {"total_seconds", timings.total_seconds}};
    open_out(path) << j.dump(2) << '\n';
}

RunConfig read_config_echo(const std::string& report_path) {
    std::ifstream in(report_path);
    if (!in) throw ConfigError("cannot open report: " + report_path);
    json j;
    in >> j;
    if (!j.contains("config_echo")) throw ConfigError("report has no config_echo: " + report_path);
    const json& c = j["config_echo"];
    RunConfig cfg;
    cfg.scenario = c.at("scenario").get<std::string>();
    cfg.b = c.at("b").get<double>();
    cfg.wave_c = c.at("wave_c").get<double>();
    cfg.wave_umax = c.at("wave_umax").get<double>();
    cfg.T = c.at("T").get<double>();
    cfg.M = c.at("M").get<int>();
    cfg.A = c.at("A").get<double>();
    cfg.damping = c.at("damping").get<double>();
    cfg.tol_fp = c.at("tol_fp").get<double>();
    cfg.max_iter = c.at("max_iter").get<int>();
    cfg.adaptive_T = c.at("adaptive_T").get<bool>();
    cfg.workers = c.at("workers").get<int>();
    cfg.n = c.at("n").get<int>();
    cfg.t_end = c.at("t_end").get<double>();
    cfg.seed = c.at("seed").get<std::uint64_t>();
    cfg.seed_set = c.at("seed_set").get<bool>();
    cfg.snapshot_times = c.at("snapshot_times").get<std::vector<double>>();
    return cfg;
}

} // namespace fbp
