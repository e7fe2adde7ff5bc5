#pragma once

#include <functional>
#include <vector>

#include "fbp/time_grid.hpp"

namespace fbp {

/// Weakly singular kernel k(t,tau)/sqrt(t-tau) of Abel type.  smooth_factor
/// must be evaluable for all 0 <= tau <= t including the diagonal limit
/// tau -> t, and bounded by k_max (reported, checked only as a diagnostic).
struct SingularKernel {
    std::function<double(double, double)> smooth_factor;
    double k_max = 0.0;
};

/// Solves phi(t) = psi(t) + int_0^t k(t,tau) (t-tau)^(-1/2) phi(tau) dtau by
/// causal product-integration marching: on each subinterval k(t_i,.)phi(.) is
/// interpolated linearly and the Abel weight integrated exactly; the node-i
/// equation is solved implicitly for phi(t_i).  phi(t_0) = psi(t_0), the
/// analytic limit supplied by the caller.
/// Throws SingularStepError when |1 - w_ii k(t_i,t_i)| < 1e-10.
GridFunction solve_weakly_singular(const SingularKernel& kernel,
                                   const GridFunction& forcing,
                                   const TimeGrid& grid);

/// Truncated Neumann/Picard series for the pure Abel problem
/// phi = 1 + lambda int_0^t (t-tau)^(-1/2) phi dtau, summed in closed form:
/// phi(t) = sum_n a_n t^(n/2) with Gamma-function ratio coefficients.
/// Throws SeriesConvergenceError if the remainder bound exceeds remainder_tol.
GridFunction picard_series_oracle(double lambda, const TimeGrid& grid, int terms,
                                  double remainder_tol = 1e-9);

/// Discrete Picard iteration on the same product-integration weights, kept as
/// an alternative solve path for contraction diagnostics.
struct PicardIterationResult {
    GridFunction solution;
    std::vector<double> update_norms; // sup |phi^{m+1} - phi^m| per sweep
};
PicardIterationResult solve_by_picard_iteration(const SingularKernel& kernel,
                                                const GridFunction& forcing,
                                                const TimeGrid& grid,
                                                int max_sweeps, double tol);

} // namespace fbp
