#include "fbp/initial_datum.hpp"

#include <cmath>

#include "fbp/errors.hpp"
#include "fbp/quadrature.hpp"

namespace fbp {

double sup_h_prime(const InitialDatum& datum, int samples) {
    double m = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double x = datum.b + datum.support_width * i / samples;
        m = std::max(m, std::abs(datum.h_prime(x)));
    }
    return m;
}

void validate_initial_datum(const InitialDatum& datum) {
    if (!(datum.support_width > 0.0))
        throw ConfigError("initial datum: support width must be positive");
    if (std::abs(datum.rho0(datum.b)) > 1e-10)
        throw ConfigError("initial datum: rho0(b) must vanish");
    if (std::abs(datum.h(datum.b) - 2.0) > 1e-3)
        throw ConfigError("initial datum: rho0'(b) must equal 2");
    const double hi = datum.b + datum.support_width;
    // mass = 1 and positivity, 64 panels of 8-point Gauss over the support
    double mass = 0.0;
    const int panels = 64;
    for (int p = 0; p < panels; ++p) {
        const double a = datum.b + datum.support_width * p / panels;
        const double c = datum.b + datum.support_width * (p + 1) / panels;
        mass += gauss8(datum.rho0, a, c);
    }
    if (std::abs(mass - 1.0) > 1e-8)
        throw ConfigError("initial datum: mass is " + std::to_string(mass) + ", expected 1");
    for (int i = 0; i <= 512; ++i) {
        const double x = datum.b + datum.support_width * i / 512.0;
        if (datum.rho0(x) < -1e-12) throw ConfigError("initial datum: rho0 must be nonnegative");
    }
    if (std::abs(datum.rho0(hi + 1.0)) > 0.0 || std::abs(datum.h(hi + 1.0)) > 0.0)
        throw ConfigError("initial datum: must vanish beyond the support");
}

} // namespace fbp
