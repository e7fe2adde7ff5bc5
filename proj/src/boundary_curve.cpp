#include "fbp/boundary_curve.hpp"

#include <cmath>
#include <stdexcept>

#include "fbp/errors.hpp"

namespace fbp {

BoundaryCurve::BoundaryCurve(TimeGrid g, std::vector<double> v, double budget)
    : grid(std::move(g)), values(std::move(v)), lipschitz_budget(budget) {
    if (values.size() != grid.nodes.size())
        throw std::invalid_argument("BoundaryCurve: values/grid size mismatch");
}

double BoundaryCurve::operator()(double t) const {
    const auto& n = grid.nodes;
    if (t <= n.front()) return values.front();
    if (t >= n.back()) return values.back();
    const int j = grid.interval_of(t);
    const double w = (t - n[j]) / (n[j + 1] - n[j]);
    return values[j] + w * (values[j + 1] - values[j]);
}

double BoundaryCurve::slope(int j) const {
    return (values[j + 1] - values[j]) / (grid.nodes[j + 1] - grid.nodes[j]);
}

BoundaryCurve flat_curve(const TimeGrid& grid, double b, double budget) {
    return BoundaryCurve(grid, std::vector<double>(grid.nodes.size(), b), budget);
}

double lipschitz_seminorm(const BoundaryCurve& curve) {
    double m = 0.0;
    for (int j = 0; j < curve.grid.intervals(); ++j) m = std::max(m, std::abs(curve.slope(j)));
    return m;
}

void require_in_class(const BoundaryCurve& curve) {
    const double sn = lipschitz_seminorm(curve);
    if (sn > curve.lipschitz_budget * (1.0 + 1e-9) + 1e-12)
        throw BudgetError("boundary curve leaves Sigma(A,T): seminorm " + std::to_string(sn) +
                              " exceeds budget " + std::to_string(curve.lipschitz_budget),
                          sn, curve.lipschitz_budget);
}

} // namespace fbp
