#pragma once

#include <vector>

#include "fbp/halfline_heat.hpp"
#include "fbp/kernels.hpp"

namespace fbp {

/// Closed-form traveling-wave profile: rho(x,t) = w(x - b - c t) with
/// (1/2) w'' + c w' + w = 0, w(0) = 0, w'(0) = 2, unit mass; admissible for
/// c >= sqrt(2).  At c = sqrt(2) the decay roots coincide and
/// w(u) = 2 u e^{-sqrt(2) u}.
struct TravelingWave {
    double speed = 0.0;
    double lam1 = 0.0; // -c + sqrt(c^2-2)
    double lam2 = 0.0; // -c - sqrt(c^2-2)
    double amplitude = 0.0;
    bool degenerate = false; // c == sqrt(2)

    double value(double u) const;
    double deriv(double u) const;
    double second_deriv(double u) const;
    /// mass of the profile beyond u0 (closed form)
    double tail_mass(double u0) const;
};

/// Throws std::domain_error for c < sqrt(2) (oscillatory profile).
TravelingWave traveling_wave(double c);

/// Default quartic datum rho0(x) = 2 (x-b) (1 - (x-b)/s)^3 on [b, b+s],
/// s = sqrt(10), so that the mass is s^2/10 = 1.
InitialDatum make_initial_datum(double b);

/// Truncated traveling-wave datum: rho0 = w(x-b)/Z on [b, b+u_max], Z the
/// retained mass.  Default cut where the profile is below 1e-6; the edge
/// value rho0(b+u_max) leaks into the conservation suite at about 10x its
/// size, so shallow truncations trade oracle fidelity for speed.
InitialDatum make_wave_datum(double b, double c, double u_max = 18.0 / kSqrt2);

/// rho(x,t) = int_{L_t}^x e^t v(y,t) dy (adaptive quadrature of the field).
double reconstruct_rho(const FieldSolution& field, double x, double t);

/// Direct representation
///   rho(x,t) = e^t [ w_phi(x,t) - int h(xi) Psi((x-xi)/sqrt t) dxi ],
/// an independent route used for cross-checking reconstruct_rho.
double rho_direct(const FieldSolution& field, double x, double t);

/// Right end of the evaluation window, b + support_width + 8 sqrt(T).
double x_max(const FieldSolution& field);

/// Both conservation integrals from one pass over the field:
/// mass = int rho dx (computed as e^t int (x_max - y) v dy) and
/// v_mass = int v dx over [L_t, x_max].
struct Conservation {
    double mass;
    double v_mass;
};
Conservation conservation(const FieldSolution& field, double t);

/// int_{L_t}^{x_max} rho dx, computed as e^t int (x_max - y) v(y,t) dy.
double mass(const FieldSolution& field, double t);

/// int_{L_t}^{x_max} v dx (should vanish: conservation of the gradient field).
double v_mass(const FieldSolution& field, double t);

/// Richardson-extrapolated one-sided derivative of rho at the boundary
/// (contract: = 2), offsets {eps0, 2 eps0, 4 eps0}, eps0 = (x_max - b)/2048.
double boundary_slope(const FieldSolution& field, double t);

/// Richardson-extrapolated one-sided second derivative of rho at the boundary.
double boundary_curvature(const FieldSolution& field, double t);

/// Stefan velocity identity Ldot = -1/4 rho_xx(L_t,t): lhs is a centered
/// difference of the curve, rhs the extrapolated boundary curvature.
struct StefanCheck {
    double lhs;
    double rhs;
};
StefanCheck stefan_velocity_check(const FieldSolution& field, double t);

/// Field snapshot on quadratically boundary-clustered nodes in [L_t, x_max].
struct DensitySnapshot {
    double t = 0.0;
    std::vector<double> x_nodes;
    std::vector<double> rho_values;
    std::vector<double> v_values;
    double mass = 0.0;
    double boundary_slope = 0.0;
    double boundary_curvature = 0.0;
};
DensitySnapshot make_snapshot(const FieldSolution& field, double t, int nodes = 512,
                              ExecPolicy policy = ExecPolicy::parallel);

/// Cumulative distribution of the snapshot density, normalized to 1.
struct DensityCdf {
    std::vector<double> x;
    std::vector<double> F;
    double operator()(double xq) const;
    /// inverse by monotone interpolation (for direct sampling)
    double quantile(double p) const;
};
DensityCdf make_cdf(const DensitySnapshot& snapshot);
/// CDF of the initial datum itself (the t = 0 snapshot), on a uniform table.
DensityCdf make_initial_cdf(const InitialDatum& datum, int table_size = 16384);

} // namespace fbp
