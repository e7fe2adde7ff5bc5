#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>

namespace fbp {

/// 8-point Gauss-Legendre rule on [-1, 1].
inline constexpr std::array<double, 8> kGauss8Nodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
inline constexpr std::array<double, 8> kGauss8Weights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

template <class F>
double gauss8(F&& f, double a, double c) {
    const double half = 0.5 * (c - a);
    const double mid = 0.5 * (a + c);
    double acc = 0.0;
    for (std::size_t i = 0; i < 8; ++i)
        acc += kGauss8Weights[i] * f(mid + half * kGauss8Nodes[i]);
    return half * acc;
}

/// 4-point Gauss-Legendre rule on [-1, 1] (fast path for glass-smooth panels).
inline constexpr std::array<double, 4> kGauss4Nodes = {
    -0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526};
inline constexpr std::array<double, 4> kGauss4Weights = {
    0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538};

template <class F>
double gauss4(F&& f, double a, double c) {
    const double half = 0.5 * (c - a);
    const double mid = 0.5 * (a + c);
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        acc += kGauss4Weights[i] * f(mid + half * kGauss4Nodes[i]);
    return half * acc;
}

namespace detail {

template <class F>
double adaptive_gauss8_impl(F& f, double a, double c, double whole, double tol, int depth) {
    const double mid = 0.5 * (a + c);
    const double left = gauss8(f, a, mid);
    const double right = gauss8(f, mid, c);
    const double two = left + right;
    if (std::abs(two - whole) <= tol || depth >= 24) return two;
    return adaptive_gauss8_impl(f, a, mid, left, 0.5 * tol, depth + 1) +
           adaptive_gauss8_impl(f, mid, c, right, 0.5 * tol, depth + 1);
}

} // namespace detail

/// Adaptive Gauss-Legendre quadrature of a smooth integrand on [a, c].
template <class F>
double adaptive_gauss8(F&& f, double a, double c, double abs_tol) {
    if (!(c > a)) return 0.0;
    return detail::adaptive_gauss8_impl(f, a, c, gauss8(f, a, c), abs_tol, 0);
}

/// Closed-form weights for product integration of the Abel weight:
///   int_a^c (s-tau)^(-1/2) * linear(tau) dtau,
/// where linear interpolates nodal values at a and c.  Requires a < c <= s.
struct AbelPanelWeights {
    double left;
    double right;
};

inline AbelPanelWeights abel_panel_weights(double a, double c, double s) {
    const double d = c - a;
    const double alpha = std::sqrt(s - a);
    const double beta = (s > c) ? std::sqrt(s - c) : 0.0;
    const double denom = (alpha + beta) * (alpha + beta);
    return {(2.0 / 3.0) * d * (alpha + 2.0 * beta) / denom,
            (2.0 / 3.0) * d * (2.0 * alpha + beta) / denom};
}

namespace detail {

template <class F>
double abel_panel_adaptive(F& f, int j, double a, double c, double s, double fa, double fc,
                           double tol, int depth) {
    const double mid = 0.5 * (a + c);
    const double fm = f(mid, j);
    if (std::abs(fm - 0.5 * (fa + fc)) > tol && depth < 42 && (c - a) > 1e-16 * s) {
        return abel_panel_adaptive(f, j, a, mid, s, fa, fm, tol, depth + 1) +
               abel_panel_adaptive(f, j, mid, c, s, fm, fc, tol, depth + 1);
    }
    const auto w = abel_panel_weights(a, c, s);
    return w.left * fa + w.right * fc;
}

} // namespace detail

/// Product integration of int_0^s (s-tau)^(-1/2) f(tau) dtau over the panels
/// induced by `nodes` (the time-grid prefix below s, then s itself).  Panels
/// where the smooth factor deviates from linearity are bisected, which
/// resolves the Gaussian boundary layer of off-curve potential evaluations.
/// f(tau, j) receives the index j of the enclosing grid panel, so integrands
/// with per-interval data (curve slopes) stay single-valued within a panel.
/// f must be evaluable on [0, s] including the tau -> s limit.
template <class F>
double abel_integrate(F&& f, std::span<const double> nodes, double s, double smooth_tol) {
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
        const double a = nodes[j];
        if (a >= s) break;
        const double c = (nodes[j + 1] < s) ? nodes[j + 1] : s;
        const int ji = static_cast<int>(j);
        acc += detail::abel_panel_adaptive(f, ji, a, c, s, f(a, ji), f(c, ji), smooth_tol, 0);
    }
    if (s > nodes.back()) {
        const int ji = static_cast<int>(nodes.size()) - 2;
        acc += detail::abel_panel_adaptive(f, ji, nodes.back(), s, s, f(nodes.back(), ji),
                                           f(s, ji), smooth_tol, 0);
    }
    return acc;
}

} // namespace fbp
