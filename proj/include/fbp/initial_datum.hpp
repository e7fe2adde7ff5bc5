#pragma once

#include <functional>

namespace fbp {

/// Initial data of the problem: rho0 on [b, b+support_width] with
/// rho0(b) = 0, rho0'(b) = 2, unit mass, and h = rho0' the datum of the
/// derivative field.  h_prime is needed by the boundary-gradient equation.
struct InitialDatum {
    double b = 0.0;
    double support_width = 0.0;
    std::function<double(double)> rho0;    // of absolute position x
    std::function<double(double)> h;       // rho0'
    std::function<double(double)> h_prime; // rho0''
};

/// sup |h'| over the support, sampled densely (feeds the Lipschitz budget
/// and the Gronwall diagnostic only, never solution values).
double sup_h_prime(const InitialDatum& datum, int samples = 8192);

/// Checks the constraints rho0(b)=0, h(b)=2, rho0 >= 0, unit mass,
/// vanishing beyond the support.  Throws ConfigError on violation.
/// Test fixtures may bypass this by constructing the struct directly.
void validate_initial_datum(const InitialDatum& datum);

} // namespace fbp
