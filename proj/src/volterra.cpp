#include "fbp/volterra.hpp"

#include <cmath>
#include <stdexcept>

#include "fbp/errors.hpp"
#include "fbp/kernels.hpp"
#include "fbp/quadrature.hpp"

namespace fbp {

namespace {

void check_inputs(const GridFunction& forcing, const TimeGrid& grid) {
    if (forcing.grid.nodes != grid.nodes)
        throw std::invalid_argument("volterra: forcing not aligned with grid");
}

} // namespace

GridFunction solve_weakly_singular(const SingularKernel& kernel,
                                   const GridFunction& forcing,
                                   const TimeGrid& grid) {
    check_inputs(forcing, grid);
    const auto& t = grid.nodes;
    const int M = grid.intervals();
    std::vector<double> phi(M + 1);
    phi[0] = forcing.values[0];
    for (int i = 1; i <= M; ++i) {
        const double s = t[i];
        double acc = forcing.values[i];
        double diag = 0.0;
        for (int j = 0; j < i; ++j) {
            const auto w = abel_panel_weights(t[j], t[j + 1], s);
            acc += w.left * kernel.smooth_factor(s, t[j]) * phi[j];
            if (j + 1 < i)
                acc += w.right * kernel.smooth_factor(s, t[j + 1]) * phi[j + 1];
            else
                diag = w.right * kernel.smooth_factor(s, s);
        }
        const double denom = 1.0 - diag;
        if (std::abs(denom) < 1e-10)
            throw SingularStepError("solve_weakly_singular: ill-conditioned diagonal at node " +
                                    std::to_string(i));
        phi[i] = acc / denom;
    }
    return {grid, std::move(phi)};
}

GridFunction picard_series_oracle(double lambda, const TimeGrid& grid, int terms,
                                  double remainder_tol) {
    if (terms < 1) throw std::invalid_argument("picard_series_oracle: terms >= 1 required");
    const double T = grid.horizon();
    // coefficients a_{n+1} = lambda * a_n * Gamma(1/2) Gamma(n/2+1) / Gamma(n/2+3/2)
    std::vector<double> coeff(terms + 1);
    coeff[0] = 1.0;
    for (int n = 0; n < terms; ++n)
        coeff[n + 1] = lambda * coeff[n] * std::tgamma(0.5) * std::tgamma(0.5 * n + 1.0) /
                       std::tgamma(0.5 * n + 1.5);
    // remainder bound: the terms are eventually dominated by a geometric tail
    // with ratio r = |lambda| sqrt(pi T) / sqrt((terms+1)/2)
    const double last = std::abs(coeff[terms]) * std::pow(T, 0.5 * terms);
    const double r = std::abs(lambda) * std::sqrt(kPi * T) / std::sqrt(0.5 * (terms + 1));
    const double remainder = (r < 1.0) ? last * r / (1.0 - r) : INFINITY;
    if (!(remainder <= remainder_tol))
        throw SeriesConvergenceError("picard_series_oracle: remainder bound " +
                                     std::to_string(remainder) + " exceeds tolerance");
    std::vector<double> vals(grid.nodes.size());
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        const double sq = std::sqrt(grid.nodes[i]);
        double p = 1.0, acc = 0.0;
        for (int n = 0; n <= terms; ++n) {
            acc += coeff[n] * p;
            p *= sq;
        }
        vals[i] = acc;
    }
    return {grid, std::move(vals)};
}

PicardIterationResult solve_by_picard_iteration(const SingularKernel& kernel,
                                                const GridFunction& forcing,
                                                const TimeGrid& grid,
                                                int max_sweeps, double tol) {
    check_inputs(forcing, grid);
    const auto& t = grid.nodes;
    const int M = grid.intervals();
    std::vector<double> phi = forcing.values;
    std::vector<double> next(M + 1);
    PicardIterationResult out;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        next[0] = forcing.values[0];
        for (int i = 1; i <= M; ++i) {
            const double s = t[i];
            double acc = forcing.values[i];
            for (int j = 0; j < i; ++j) {
                const auto w = abel_panel_weights(t[j], t[j + 1], s);
                acc += w.left * kernel.smooth_factor(s, t[j]) * phi[j];
                const double tr = (j + 1 < i) ? t[j + 1] : s;
                acc += w.right * kernel.smooth_factor(s, tr) * phi[j + 1];
            }
            next[i] = acc;
        }
        double diff = 0.0;
        for (int i = 0; i <= M; ++i) diff = std::max(diff, std::abs(next[i] - phi[i]));
        out.update_norms.push_back(diff);
        phi.swap(next);
        if (diff <= tol) break;
    }
    out.solution = {grid, std::move(phi)};
    return out;
}

} // namespace fbp
