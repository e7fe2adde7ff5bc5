#include "fbp/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fbp/errors.hpp"
#include "fbp/kernels.hpp"

namespace fbp {

BoundaryCurve apply_K_with_gradient(const BoundaryCurve& curve, const GridFunction& q) {
    const auto& t = curve.grid.nodes;
    std::vector<double> vals(t.size());
    vals[0] = curve.start();
    double acc = 0.0;
    double prev = q.values[0]; // e^0 * q(0)
    for (std::size_t i = 1; i < t.size(); ++i) {
        const double cur = std::exp(t[i]) * q.values[i];
        acc += 0.5 * (prev + cur) * (t[i] - t[i - 1]);
        prev = cur;
        vals[i] = curve.start() - 0.25 * acc;
    }
    BoundaryCurve image(curve.grid, std::move(vals), curve.lipschitz_budget);
    require_in_class(image);
    return image;
}

BoundaryCurve apply_K(const BoundaryCurve& curve, const InitialDatum& datum,
                      const FieldOptions& opts) {
    return apply_K_with_gradient(curve, boundary_gradient(curve, datum, opts));
}

double lipschitz_budget(const InitialDatum& datum, double horizon) {
    const double c2 = 4.0 * kInvSqrt2Pi;
    const double c3 = sup_h_prime(datum);
    const double rt = std::sqrt(horizon);
    const double base = 0.25 * std::exp(horizon) * 1.5;
    double a = base * (c2 * rt + c3);
    for (int sweep = 0; sweep < 3; ++sweep) {
        const double c1 = a * kInvSqrt2Pi;
        a = base * (1.0 + 2.0 * c1 * rt) * std::exp(kPi * c1 * c1 * horizon) * (c2 * rt + c3);
        if (!(a < 1e6)) return 1e6;
    }
    return a;
}

namespace {

double max_scaled_second_difference(const BoundaryCurve& curve) {
    const auto& t = curve.grid.nodes;
    const auto& v = curve.values;
    double m = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const double dt = 0.5 * (t[i + 1] - t[i - 1]);
        m = std::max(m, std::abs(v[i + 1] - 2.0 * v[i] + v[i - 1]) / (dt * dt));
    }
    return m;
}

} // namespace

FbpSolution solve_fbp(const SolverConfig& config, const InitialDatum& datum,
                      const FieldOptions& opts) {
    if (!(config.horizon > 0.0)) throw ConfigError("solve_fbp: horizon must be positive");
    if (config.grid_size < 2) throw ConfigError("solve_fbp: grid size must be >= 2");
    if (!(config.lipschitz_budget > 0.0)) throw ConfigError("solve_fbp: budget must be positive");
    if (!(config.damping > 0.0) || config.damping > 1.0)
        throw ConfigError("solve_fbp: damping must lie in (0, 1]");
    if (!(config.tol_fp > 0.0)) throw ConfigError("solve_fbp: tol_fp must be positive");
    if (config.max_iter < 1) throw ConfigError("solve_fbp: max_iter must be >= 1");

    FixedPointReport report;
    const double c3_quarter = 0.25 * sup_h_prime(datum);
    if (config.lipschitz_budget <= c3_quarter)
        report.warnings.push_back("lipschitz budget A <= sup|h'|/4; the map K may not be a self-map");

    double horizon = config.horizon;
    int halvings = 0;
    for (;;) {
        const TimeGrid grid = TimeGrid::uniform(horizon, config.grid_size);
        BoundaryCurve curve = flat_curve(grid, config.b, config.lipschitz_budget);
        double theta = config.damping;
        std::vector<double> residuals;
        try {
            for (int k = 0; k < config.max_iter; ++k) {
                const GridFunction q = boundary_gradient(curve, datum, opts);
                const BoundaryCurve image = apply_K_with_gradient(curve, q);
                double res = 0.0;
                for (std::size_t i = 0; i < image.values.size(); ++i)
                    res = std::max(res, std::abs(image.values[i] - curve.values[i]));
                residuals.push_back(res);
                if (res <= config.tol_fp) {
                    report.iterates = k + 1;
                    report.final_residual = res;
                    report.residual_history = residuals;
                    for (std::size_t i = 1; i < residuals.size(); ++i)
                        report.contraction_ratios.push_back(residuals[i] / residuals[i - 1]);
                    report.lipschitz_seminorm = lipschitz_seminorm(curve);
                    report.horizon_used = horizon;
                    report.horizon_halvings = halvings;
                    report.converged = true;
                    report.damping_used = theta;
                    report.sup_q = q.sup_norm();
                    report.gronwall_bound =
                        gronwall_gradient_bound(datum, config.lipschitz_budget, horizon);
                    report.second_difference_bound = max_scaled_second_difference(curve);
                    FieldSolution field = make_field_solution(curve, datum, opts);
                    return {std::move(curve), image, std::move(field), std::move(report)};
                }
                // damping fallback after 3 consecutive non-decreasing residuals
                const std::size_t n = residuals.size();
                if (theta > 0.5 && n >= 4 && residuals[n - 1] >= residuals[n - 2] &&
                    residuals[n - 2] >= residuals[n - 3] && residuals[n - 3] >= residuals[n - 4]) {
                    theta = 0.5;
                    report.warnings.push_back("residual stalled; damping reduced to 0.5");
                }
                for (std::size_t i = 0; i < curve.values.size(); ++i)
                    curve.values[i] = (1.0 - theta) * curve.values[i] + theta * image.values[i];
            }
            throw NoConvergenceError("solve_fbp: max_iter reached with residual " +
                                         std::to_string(residuals.back()),
                                     residuals);
        } catch (const BudgetError&) {
            if (!config.adaptive_horizon) throw;
            if (halvings >= 6)
                throw NoConvergenceError("solve_fbp: horizon halving cap exhausted", residuals);
            horizon *= 0.5;
            ++halvings;
        }
    }
}

} // namespace fbp
