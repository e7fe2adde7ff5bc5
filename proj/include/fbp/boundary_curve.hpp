#pragma once

#include "fbp/time_grid.hpp"

namespace fbp {

/// Free boundary candidate on a time grid, member of the class
/// Sigma(A,T) = { L continuous, L(0) = b, |L(t2)-L(t1)| <= A |t2-t1| }.
struct BoundaryCurve {
    TimeGrid grid;
    std::vector<double> values;
    double lipschitz_budget = 0.0; // A

    BoundaryCurve() = default;
    BoundaryCurve(TimeGrid g, std::vector<double> v, double budget);

    double start() const { return values.front(); }
    double operator()(double t) const;
    /// Slope on grid interval j (piecewise-linear curve).
    double slope(int j) const;
};

/// Flat curve L == b.
BoundaryCurve flat_curve(const TimeGrid& grid, double b, double budget);

/// max over adjacent node pairs of |dL/dt|; for piecewise-linear curves this
/// equals the supremum over all pairs.
double lipschitz_seminorm(const BoundaryCurve& curve);

/// Throws BudgetError if the seminorm exceeds the budget (with slack for
/// floating-point noise).
void require_in_class(const BoundaryCurve& curve);

} // namespace fbp
