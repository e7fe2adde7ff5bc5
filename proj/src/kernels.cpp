#include "fbp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fbp/initial_datum.hpp"
#include "fbp/quadrature.hpp"

namespace fbp {

double heat_kernel(double x, double t, double xi, double tau) {
    const double gap = t - tau;
    if (gap < kMinKernelGap)
        throw std::domain_error("heat_kernel: requires t - tau >= 1e-14");
    const double d = x - xi;
    return kInvSqrt2Pi / std::sqrt(gap) * std::exp(-d * d / (2.0 * gap));
}

double heat_kernel_dx(double x, double t, double xi, double tau) {
    const double gap = t - tau;
    if (gap < kMinKernelGap)
        throw std::domain_error("heat_kernel_dx: requires t - tau >= 1e-14");
    return -(x - xi) / gap * heat_kernel(x, t, xi, tau);
}

double normal_tail(double z) {
    return 0.5 * std::erfc(z / kSqrt2);
}

double convolve_support(const std::function<double(double)>& f, double lo, double hi,
                        double x, double t) {
    if (t <= 0.0) throw std::domain_error("convolve_support: requires t > 0");
    const double st = std::sqrt(t);
    lo = std::max(lo, x - 12.0 * st);
    hi = std::min(hi, x + 12.0 * st);
    if (lo >= hi) return 0.0;
    const double max_width = 0.5 * st;
    const int panels = std::max(8, (int)std::ceil((hi - lo) / max_width));
    const double dx = (hi - lo) / panels;
    const double inv2t = 1.0 / (2.0 * t);
    const double norm = kInvSqrt2Pi / st;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * dx;
        acc += gauss8(
            [&](double xi) {
                const double d = x - xi;
                return f(xi) * std::exp(-d * d * inv2t);
            },
            a, a + dx);
    }
    return norm * acc;
}

double convolve_initial(const InitialDatum& datum, double x, double t) {
    if (t <= 0.0) throw std::domain_error("convolve_initial: requires t > 0");
    return convolve_support(datum.h, datum.b, datum.b + datum.support_width, x, t);
}

double convolve_initial_derivative(const InitialDatum& datum, double x, double t) {
    if (t <= 0.0) throw std::domain_error("convolve_initial_derivative: requires t > 0");
    return convolve_support(datum.h_prime, datum.b, datum.b + datum.support_width, x, t);
}

} // namespace fbp
