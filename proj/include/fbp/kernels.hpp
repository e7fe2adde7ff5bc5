#pragma once

#include <functional>

namespace fbp {

struct InitialDatum;

/// Point of the space-time strip; t is non-negative in all public uses.
struct SpaceTimePoint {
    double x;
    double t;
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSqrt2 = 1.414213562373095048801688724209698079;
inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934381868;

/// Evaluations with t - tau below this are rejected; singular limits belong
/// to the product-integration callers, not to the kernel.
inline constexpr double kMinKernelGap = 1e-14;

/// Gaussian heat kernel G(x,t;xi,tau) = (2 pi (t-tau))^(-1/2) exp(-(x-xi)^2 / (2(t-tau))),
/// the fundamental solution of u_t = u_xx / 2.  Requires t - tau >= 1e-14.
double heat_kernel(double x, double t, double xi, double tau);

/// Spatial derivative G_x = -(x-xi)/(t-tau) * G.  Requires t - tau >= 1e-14.
double heat_kernel_dx(double x, double t, double xi, double tau);

/// Upper tail of the standard normal: Psi(z) = int_z^inf (2 pi)^(-1/2) e^(-u^2/2) du.
double normal_tail(double z);

/// Quadrature of f(xi) * G(x,t;xi,0) over [lo, hi] by fixed-order
/// Gauss-Legendre panels, panel width <= sqrt(t)/2 with a floor of 8 panels.
/// Panels farther than 12 standard deviations from x are skipped.
double convolve_support(const std::function<double(double)>& f, double lo, double hi,
                        double x, double t);

/// Heat evolution of the initial slope datum: int_b^{b+s} h(xi) G(x,t;xi,0) dxi.
double convolve_initial(const InitialDatum& datum, double x, double t);

/// Same for the derivative h' (Eq.-(9)-style forcing integrand).
double convolve_initial_derivative(const InitialDatum& datum, double x, double t);

} // namespace fbp
