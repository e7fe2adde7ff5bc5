#pragma once

#include <span>
#include <vector>

namespace fbp {

/// Strictly increasing time nodes 0 = t_0 < t_1 < ... < t_M = T.
/// M counts intervals; there are M + 1 nodes.
struct TimeGrid {
    std::vector<double> nodes;

    static TimeGrid uniform(double horizon, int intervals);
    /// Nodes proportional to (i/M)^power * T; power 2 resolves sqrt(t) layers.
    static TimeGrid graded(double horizon, int intervals, double power = 2.0);

    double horizon() const { return nodes.back(); }
    int intervals() const { return static_cast<int>(nodes.size()) - 1; }
    /// Index j with nodes[j] <= t < nodes[j+1] (clamped to the last interval).
    int interval_of(double t) const;

    bool operator==(const TimeGrid&) const = default;
};

/// Nodal values aligned with a TimeGrid, interpolated piecewise-linearly.
struct GridFunction {
    TimeGrid grid;
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(TimeGrid g, std::vector<double> v);

    double operator()(double t) const;
    /// Slope of the linear interpolant on interval j.
    double slope(int j) const;
    double sup_norm() const;
};

} // namespace fbp
