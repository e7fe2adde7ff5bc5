#pragma once

#include <string>
#include <vector>

#include "fbp/halfline_heat.hpp"

namespace fbp {

struct SolverConfig {
    double b = 1.0;
    double horizon = 0.25;       // T
    int grid_size = 256;         // M (intervals)
    double lipschitz_budget = 3.0; // A
    double damping = 1.0;        // theta in (0, 1]
    double tol_fp = 1e-8;
    int max_iter = 100;
    bool adaptive_horizon = true;
};

struct FixedPointReport {
    int iterates = 0;
    double final_residual = 0.0;
    std::vector<double> residual_history;
    std::vector<double> contraction_ratios;
    double lipschitz_seminorm = 0.0;
    double horizon_used = 0.0;
    int horizon_halvings = 0;
    bool converged = false;
    double damping_used = 1.0;
    double gronwall_bound = 0.0;   // Eq.-(10)-type bound on sup |q|
    double sup_q = 0.0;
    double second_difference_bound = 0.0; // max |L_{i+1}-2L_i+L_{i-1}| / dt^2
    std::vector<std::string> warnings;
};

/// Boundary-update map K[L](t) = b - 1/4 int_0^t e^tau v_x(L_tau,tau) dtau,
/// integrated by composite trapezoid of e^tau q(tau) on the grid.
/// Throws BudgetError if the image leaves Sigma(A,T).
BoundaryCurve apply_K(const BoundaryCurve& curve, const InitialDatum& datum,
                      const FieldOptions& opts = {});

/// Same map with a precomputed boundary gradient (used by the solver loop).
BoundaryCurve apply_K_with_gradient(const BoundaryCurve& curve, const GridFunction& q);

/// Recommended Lipschitz budget
///   A = 1/4 e^T (1 + 2 C1 sqrt(T)) exp(pi C1^2 T) (C2 sqrt(T) + C3) * 1.5,
/// C1 = A/sqrt(2 pi) resolved by 3 fixed-point sweeps from C1 = 0.  The sweep
/// contracts only for small T * C3^2; the result is clamped at 1e6 and is a
/// sizing diagnostic, not a solver input.
double lipschitz_budget(const InitialDatum& datum, double horizon);

struct FbpSolution {
    BoundaryCurve curve;      // fixed point L*
    BoundaryCurve final_map;  // K[L*] (for per-node residuals)
    FieldSolution field;      // recomputed at L*
    FixedPointReport report;
};

/// Damped Picard iteration L <- (1-theta) L + theta K[L] from L == b until
/// sup |K[L]-L| <= tol_fp.  theta falls back to 0.5 after 3 non-decreasing
/// residuals; on a budget violation with adaptive_horizon set, T is halved
/// and the iteration restarts (at most 6 halvings).
/// Throws NoConvergenceError when the caps are exhausted.
FbpSolution solve_fbp(const SolverConfig& config, const InitialDatum& datum,
                      const FieldOptions& opts = {});

} // namespace fbp
