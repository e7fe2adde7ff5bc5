#include "fbp/time_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fbp {

namespace {
void check_nodes(const std::vector<double>& nodes) {
    if (nodes.size() < 2) throw std::invalid_argument("TimeGrid: needs at least 2 nodes");
    if (nodes.front() != 0.0) throw std::invalid_argument("TimeGrid: t_0 must be 0");
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i] > nodes[i - 1]))
            throw std::invalid_argument("TimeGrid: nodes must be strictly increasing");
}
} // namespace

TimeGrid TimeGrid::uniform(double horizon, int intervals) {
    if (horizon <= 0.0 || intervals < 1)
        throw std::invalid_argument("TimeGrid::uniform: horizon > 0 and intervals >= 1 required");
    std::vector<double> nodes(intervals + 1);
    for (int i = 0; i <= intervals; ++i) nodes[i] = horizon * i / intervals;
    nodes.back() = horizon;
    check_nodes(nodes);
    return TimeGrid{std::move(nodes)};
}

TimeGrid TimeGrid::graded(double horizon, int intervals, double power) {
    if (horizon <= 0.0 || intervals < 1 || power < 1.0)
        throw std::invalid_argument("TimeGrid::graded: bad parameters");
    std::vector<double> nodes(intervals + 1);
    for (int i = 0; i <= intervals; ++i)
        nodes[i] = horizon * std::pow(double(i) / intervals, power);
    nodes.back() = horizon;
    check_nodes(nodes);
    return TimeGrid{std::move(nodes)};
}

int TimeGrid::interval_of(double t) const {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
    int j = static_cast<int>(it - nodes.begin()) - 1;
    return std::clamp(j, 0, intervals() - 1);
}

GridFunction::GridFunction(TimeGrid g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.nodes.size())
        throw std::invalid_argument("GridFunction: values/grid size mismatch");
}

double GridFunction::operator()(double t) const {
    const auto& n = grid.nodes;
    if (t <= n.front()) return values.front();
    if (t >= n.back()) return values.back();
    const int j = grid.interval_of(t);
    const double w = (t - n[j]) / (n[j + 1] - n[j]);
    return values[j] + w * (values[j + 1] - values[j]);
}

double GridFunction::slope(int j) const {
    return (values[j + 1] - values[j]) / (grid.nodes[j + 1] - grid.nodes[j]);
}

double GridFunction::sup_norm() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

} // namespace fbp
