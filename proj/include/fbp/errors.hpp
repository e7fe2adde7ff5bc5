#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbp {

/// Discrete diagonal solve of a weakly singular Volterra step is ill-conditioned.
class SingularStepError : public std::runtime_error {
public:
    explicit SingularStepError(const std::string& what) : std::runtime_error(what) {}
};

/// A boundary iterate left the admissible Lipschitz class (horizon too large).
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, double seminorm, double budget)
        : std::runtime_error(what), seminorm(seminorm), budget(budget) {}
    double seminorm;
    double budget;
};

/// Fixed-point iteration exhausted its iteration or horizon-halving caps.
class NoConvergenceError : public std::runtime_error {
public:
    NoConvergenceError(const std::string& what, std::vector<double> residual_history)
        : std::runtime_error(what), residual_history(std::move(residual_history)) {}
    std::vector<double> residual_history;
};

/// Series oracle cannot reach the requested tolerance.
class SeriesConvergenceError : public std::runtime_error {
public:
    explicit SeriesConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad configuration file or invalid parameter combination.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fbp
