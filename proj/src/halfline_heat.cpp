#include "fbp/halfline_heat.hpp"

#include <cmath>
#include <stdexcept>

#include "fbp/errors.hpp"
#include "fbp/kernels.hpp"
#include "fbp/quadrature.hpp"
#include "fbp/volterra.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fbp {

namespace {

// Smooth factor of sqrt(t-tau) G_x(L_t,t;L_tau,tau); the diagonal limit is
// -Ldot(t)/sqrt(2 pi) with Ldot the backward-difference slope at t.
double gx_smooth_factor(const BoundaryCurve& curve, double s, double tau) {
    const double gap = s - tau;
    if (gap < kMinKernelGap) {
        int j = curve.grid.interval_of(s);
        if (s <= curve.grid.nodes[j] && j > 0) --j; // backward difference at a node
        return -curve.slope(j) * kInvSqrt2Pi;
    }
    const double dL = curve(s) - curve(tau);
    return -(dL / gap) * kInvSqrt2Pi * std::exp(-dL * dL / (2.0 * gap));
}

// Smooth factor of sqrt(t-tau) G(L_t,t;L_tau,tau) times e^{-tau}.
double source_smooth_factor(const BoundaryCurve& curve, double s, double tau) {
    const double gap = s - tau;
    if (gap < kMinKernelGap) return std::exp(-s) * kInvSqrt2Pi;
    const double dL = curve(s) - curve(tau);
    return std::exp(-tau) * kInvSqrt2Pi * std::exp(-dL * dL / (2.0 * gap));
}

// Nodal product integration of int_0^{t_i} (t_i-tau)^{-1/2} sm(tau) dtau;
// on-curve factors have no boundary layer, so no panel refinement is needed.
double abel_on_grid(const TimeGrid& grid, int i,
                    const std::function<double(double)>& sm) {
    const auto& t = grid.nodes;
    const double s = t[i];
    double acc = 0.0;
    double left = sm(t[0]);
    for (int j = 0; j < i; ++j) {
        const double right = sm(t[j + 1]);
        const auto w = abel_panel_weights(t[j], t[j + 1], s);
        acc += w.left * left + w.right * right;
        left = right;
    }
    return acc;
}

void check_domain(const BoundaryCurve& curve, double x, double t, const char* who) {
    if (!(t > 0.0) || t > curve.grid.horizon() * (1.0 + 1e-12))
        throw std::domain_error(std::string(who) + ": t outside (0, T]");
    if (x < curve(t) - 1e-12)
        throw std::domain_error(std::string(who) + ": x below the boundary");
}

} // namespace

GridFunction boundary_density(const BoundaryCurve& curve, const InitialDatum& datum,
                              const FieldOptions& opts) {
    require_in_class(curve);
    const TimeGrid& grid = curve.grid;
    const int M = grid.intervals();
    std::vector<double> psi(M + 1);
    const double bc0 = opts.zero_boundary_source ? 0.0 : 2.0;
    psi[0] = -bc0 + 0.5 * datum.h(datum.b); // analytic t -> 0+ limit (half mass)
    for (int i = 1; i <= M; ++i) {
        const double t = grid.nodes[i];
        const double bc = opts.zero_boundary_source ? 0.0 : 2.0 * std::exp(-t);
        psi[i] = -bc + convolve_initial(datum, curve.values[i], t);
    }
    SingularKernel kernel{
        [&curve](double s, double tau) { return gx_smooth_factor(curve, s, tau); },
        curve.lipschitz_budget * kInvSqrt2Pi};
    return solve_weakly_singular(kernel, GridFunction(grid, std::move(psi)), grid);
}

GridFunction boundary_gradient(const BoundaryCurve& curve, const InitialDatum& datum,
                               const FieldOptions& opts) {
    require_in_class(curve);
    const TimeGrid& grid = curve.grid;
    const int M = grid.intervals();
    std::vector<double> forcing(M + 1);
    forcing[0] = datum.h_prime(datum.b); // 2 * (half-mass limit of int h' G)
    for (int i = 1; i <= M; ++i) {
        const double t = grid.nodes[i];
        double F = 2.0 * convolve_initial_derivative(datum, curve.values[i], t);
        if (!opts.zero_boundary_source) {
            F += 4.0 * abel_on_grid(grid, i, [&](double tau) {
                return source_smooth_factor(curve, t, tau);
            });
        }
        forcing[i] = F;
    }
    SingularKernel kernel{
        [&curve](double s, double tau) { return -gx_smooth_factor(curve, s, tau); },
        curve.lipschitz_budget * kInvSqrt2Pi};
    return solve_weakly_singular(kernel, GridFunction(grid, std::move(forcing)), grid);
}

FieldSolution make_field_solution(BoundaryCurve curve, InitialDatum datum,
                                  const FieldOptions& opts) {
    GridFunction phi = boundary_density(curve, datum, opts);
    GridFunction q = boundary_gradient(curve, datum, opts);
    return {std::move(curve), std::move(datum), std::move(phi), std::move(q), opts};
}

double single_layer_potential(const GridFunction& phi, const BoundaryCurve& curve,
                              double x, double t) {
    check_domain(curve, x, t, "single_layer_potential");
    const double scale = 1e-9 * std::max(1.0, phi.sup_norm());
    auto smooth = [&](double tau, int) {
        const double gap = t - tau;
        if (gap < 1e-300) {
            // tau -> t limit: 0 off the curve, phi(t)/sqrt(2 pi) on it
            return (x - curve(t) <= 0.0) ? phi(t) * kInvSqrt2Pi : 0.0;
        }
        const double dx = x - curve(tau);
        return kInvSqrt2Pi * std::exp(-dx * dx / (2.0 * gap)) * phi(tau);
    };
    return abel_integrate(smooth, curve.grid.nodes, t, scale);
}

double single_layer_potential_dx(const GridFunction& phi, const BoundaryCurve& curve,
                                 double x, double t) {
    check_domain(curve, x, t, "single_layer_potential_dx");
    const auto& nodes = curve.grid.nodes;
    const double scale = 1e-9 * std::max(1.0, phi.sup_norm());
    // -2 int Ldot G phi dtau (Abel part)
    auto smooth = [&](double tau, int j) {
        const double gap = t - tau;
        const double ld = curve.slope(j);
        if (gap < 1e-300)
            return (x - curve(t) <= 0.0) ? ld * kInvSqrt2Pi * phi(t) : 0.0;
        const double dx = x - curve(tau);
        return ld * kInvSqrt2Pi * std::exp(-dx * dx / (2.0 * gap)) * phi(tau);
    };
    const double abel_part = abel_integrate(smooth, nodes, t, scale);
    // -2 int phi'(tau) Psi(z) dtau, phi' constant per interval; panels far
    // from the tau -> t layer take the fixed 4-point rule
    double psi_part = 0.0;
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
        const double a = nodes[j];
        if (a >= t) break;
        const double c = std::min(nodes[j + 1], t);
        const double slope = phi.slope(static_cast<int>(j));
        if (slope == 0.0) continue;
        auto fpsi = [&](double tau) {
            return normal_tail((x - curve(tau)) / std::sqrt(t - tau));
        };
        psi_part += slope * ((t - c > 4.0 * (c - a)) ? gauss4(fpsi, a, c)
                                                     : adaptive_gauss8(fpsi, a, c, 1e-12));
    }
    return -2.0 * abel_part - 2.0 * phi.values.front() * normal_tail((x - curve.start()) / std::sqrt(t)) -
           2.0 * psi_part;
}

double boundary_jump_rhs(const GridFunction& phi, const BoundaryCurve& curve, double t) {
    const int i = [&] {
        // t must sit on a grid node for the on-curve product integration
        const auto& n = curve.grid.nodes;
        for (std::size_t k = 0; k < n.size(); ++k)
            if (std::abs(n[k] - t) <= 1e-12 * std::max(1.0, t)) return static_cast<int>(k);
        throw std::invalid_argument("boundary_jump_rhs: t must be a grid node");
    }();
    const double integral = abel_on_grid(curve.grid, i, [&](double tau) {
        return gx_smooth_factor(curve, t, tau) * phi(tau);
    });
    return -phi(t) + integral;
}

double evaluate_v(const FieldSolution& field, double x, double t) {
    check_domain(field.curve, x, t, "evaluate_v");
    return convolve_initial(field.datum, x, t) +
           single_layer_potential_dx(field.phi, field.curve, x, t);
}

double evaluate_v_greens(const FieldSolution& field, double x, double t) {
    const BoundaryCurve& curve = field.curve;
    check_domain(curve, x, t, "evaluate_v_greens");
    const auto& nodes = curve.grid.nodes;
    const GridFunction& q = field.q;
    const double scale = 1e-9 * std::max(1.0, q.sup_norm());
    auto smooth = [&](double tau, int) {
        const double gap = t - tau;
        if (gap < 1e-300)
            return (x - curve(t) <= 0.0) ? q(t) * kInvSqrt2Pi : 0.0;
        const double dx = x - curve(tau);
        return kInvSqrt2Pi * std::exp(-dx * dx / (2.0 * gap)) * q(tau);
    };
    double value = convolve_initial(field.datum, x, t) -
                   0.5 * abel_integrate(smooth, nodes, t, scale);
    if (!field.options.zero_boundary_source) {
        double src = 0.0;
        for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
            const double a = nodes[j];
            if (a >= t) break;
            const double c = std::min(nodes[j + 1], t);
            auto fsrc = [&](double tau) {
                return std::exp(-tau) * normal_tail((x - curve(tau)) / std::sqrt(t - tau));
            };
            src += (t - c > 4.0 * (c - a)) ? gauss4(fsrc, a, c)
                                           : adaptive_gauss8(fsrc, a, c, 1e-12);
        }
        value += 2.0 * normal_tail((x - curve.start()) / std::sqrt(t)) - 2.0 * src;
    }
    return value;
}

std::vector<double> evaluate_v_many(const FieldSolution& field, std::span<const double> xs,
                                    double t, ExecPolicy policy) {
    std::vector<double> out(xs.size());
    if (policy == ExecPolicy::parallel) {
#ifdef _OPENMP
        const int nw = worker_count();
#pragma omp parallel for schedule(dynamic, 8) num_threads(nw)
#endif
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i)
            out[i] = evaluate_v(field, xs[i], t);
    } else {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = evaluate_v(field, xs[i], t);
    }
    return out;
}

double gronwall_gradient_bound(const InitialDatum& datum, double lipschitz_budget,
                               double horizon) {
    const double c1 = lipschitz_budget * kInvSqrt2Pi;
    const double c2 = 4.0 * kInvSqrt2Pi;
    const double c3 = sup_h_prime(datum);
    const double rt = std::sqrt(horizon);
    return (1.0 + 2.0 * c1 * rt) * std::exp(kPi * c1 * c1 * horizon) * (c2 * rt + c3);
}

} // namespace fbp
