#pragma once

#include <span>
#include <vector>

#include "fbp/boundary_curve.hpp"
#include "fbp/initial_datum.hpp"
#include "fbp/parallel.hpp"
#include "fbp/time_grid.hpp"

namespace fbp {

/// Test instrumentation: drop the 2e^{-t} boundary source so that the
/// all-zero configuration is available to the degenerate-mode tests.
struct FieldOptions {
    bool zero_boundary_source = false;
};

/// Half-line heat solve for a fixed admissible boundary curve: single-layer
/// density phi, boundary gradient q = v_x(L_t, t), and the field evaluators.
struct FieldSolution {
    BoundaryCurve curve;
    InitialDatum datum;
    GridFunction phi;
    GridFunction q;
    FieldOptions options;
};

/// Single-layer density phi solving
///   phi(t) = psi(t) + int_0^t G_x(L_t,t;L_tau,tau) phi(tau) dtau,
///   psi(t) = -2e^{-t} + int h(xi) G(L_t,t;xi,0) dxi,
/// with phi(0) = psi(0) = -2 + h(b)/2 (the t -> 0+ limit of the forcing;
/// the Gaussian sees only half of its mass at the support edge).
GridFunction boundary_density(const BoundaryCurve& curve, const InitialDatum& datum,
                              const FieldOptions& opts = {});

/// Boundary gradient q(t) = v_x(L_t, t) from the second Volterra equation
///   q(t) = 2 int h' G dxi - int G_x q dtau + 4 int_0^t e^{-tau} G(L_t,t;L_tau,tau) dtau,
/// q(0) = h'(b).  Assumes the compatibility condition h(b) = 2 (otherwise
/// q has a t^{-1/2} singularity this representation cannot carry).
GridFunction boundary_gradient(const BoundaryCurve& curve, const InitialDatum& datum,
                               const FieldOptions& opts = {});

FieldSolution make_field_solution(BoundaryCurve curve, InitialDatum datum,
                                  const FieldOptions& opts = {});

/// w_phi(x,t) = int_0^t G(x,t;L_tau,tau) phi(tau) dtau for x >= L_t.
double single_layer_potential(const GridFunction& phi, const BoundaryCurve& curve,
                              double x, double t);

/// d/dx of the single-layer potential, evaluated in the boundary-stable form
///   -2 int Ldot G phi dtau - 2 phi(0) Psi((x-b)/sqrt t) - 2 int phi' Psi(z) dtau,
/// z = (x - L_tau)/sqrt(t - tau).  At x = L_t this returns the x -> L_t+ limit.
double single_layer_potential_dx(const GridFunction& phi, const BoundaryCurve& curve,
                                 double x, double t);

/// Right-hand side of the jump relation at the boundary:
///   -phi(t) + int_0^t G_x(L_t,t;L_tau,tau) phi(tau) dtau
/// (on-curve product integration; used to test the jump of the dx form).
double boundary_jump_rhs(const GridFunction& phi, const BoundaryCurve& curve, double t);

/// v(x,t) = int h G dxi + d/dx w_phi(x,t); continuous up to the boundary,
/// where its limit is the 2e^{-t} boundary value by construction of phi.
double evaluate_v(const FieldSolution& field, double x, double t);

/// Green's-identity representation of the same field:
///   v = int h G - 1/2 int G q dtau - 2 int_0^t e^{-tau} dPsi(z(tau)) ,
/// the last integral in integrated-by-parts form
///   2 Psi((x-b)/sqrt t) - 2 int e^{-tau} Psi(z) dtau  (for x > L_t).
/// (The moving-boundary flux term is included; it vanishes for flat curves.)
double evaluate_v_greens(const FieldSolution& field, double x, double t);

/// Batch evaluation over a spatial grid; the parallel path must match the
/// serial reference bitwise (independent elements, no shared reductions).
std::vector<double> evaluate_v_many(const FieldSolution& field, std::span<const double> xs,
                                    double t, ExecPolicy policy = ExecPolicy::parallel);

/// Gronwall-type a-priori bound on sup |q|:
///   (1 + 2 C1 sqrt(T)) exp(pi C1^2 T) (C2 sqrt(T) + C3),
/// C1 = A/sqrt(2 pi), C2 = 4/sqrt(2 pi), C3 = sup |h'|.  Diagnostic only.
double gronwall_gradient_bound(const InitialDatum& datum, double lipschitz_budget,
                               double horizon);

} // namespace fbp
