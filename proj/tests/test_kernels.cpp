#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fbp/density.hpp"
#include "fbp/kernels.hpp"
#include "fbp/quadrature.hpp"

using namespace fbp;

TEST_CASE("heat kernel values and symmetry") {
    CHECK(heat_kernel(0, 1, 0, 0) == doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-14));
    CHECK(heat_kernel(1, 1, 0, 0) ==
          doctest::Approx(std::exp(-0.5) / std::sqrt(2.0 * kPi)).epsilon(1e-14));
    CHECK(heat_kernel(3, 2, 1, 1) == heat_kernel(1, 2, 3, 1));
    CHECK_THROWS_AS((void)heat_kernel(0, 1, 0, 1), std::domain_error);
    CHECK_THROWS_AS((void)heat_kernel(0, 1, 0, 2), std::domain_error);
    CHECK_THROWS_AS((void)heat_kernel(0, 1, 0, 1.0 - 1e-15), std::domain_error);
}

TEST_CASE("heat kernel spatial derivative") {
    CHECK(heat_kernel_dx(0, 1, 0, 0) == 0.0);
    CHECK(heat_kernel_dx(1, 1, 0, 0) == doctest::Approx(-heat_kernel(1, 1, 0, 0)).epsilon(1e-14));
    CHECK(heat_kernel_dx(-1, 1, 0, 0) == -heat_kernel_dx(1, 1, 0, 0));
    CHECK_THROWS_AS((void)heat_kernel_dx(0, 1, 0, 1), std::domain_error);
}

TEST_CASE("heat kernel solves the heat equation (finite differences, 2nd order)") {
    const double x = 0.7, t = 1.0;
    auto residual = [&](double h) {
        const double gt = (heat_kernel(x, t + h, 0, 0) - heat_kernel(x, t - h, 0, 0)) / (2 * h);
        const double gxx = (heat_kernel(x + h, t, 0, 0) - 2 * heat_kernel(x, t, 0, 0) +
                            heat_kernel(x - h, t, 0, 0)) /
                           (h * h);
        return std::abs(gt - 0.5 * gxx);
    };
    const double r1 = residual(1e-3);
    const double r2 = residual(5e-4);
    CHECK(r1 < 1e-7);
    CHECK(r1 / r2 > 3.0); // second order in the step
}

TEST_CASE("heat kernel unit mass") {
    auto one = [](double) { return 1.0; };
    for (double t : {0.01, 0.25, 1.0}) {
        const double m = convolve_support(one, -12.0 * std::sqrt(t), 12.0 * std::sqrt(t), 0.0, t);
        CHECK(m == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("normal tail values") {
    CHECK(normal_tail(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(normal_tail(10.0) < 1e-22);
    CHECK(normal_tail(-10.0) > 1.0 - 1e-22);
    double prev = 1.1;
    for (double z = -4.0; z <= 4.0; z += 0.25) {
        CHECK(normal_tail(z) + normal_tail(-z) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(normal_tail(z) < prev);
        prev = normal_tail(z);
    }
}

TEST_CASE("normal tail against a quadrature oracle") {
    // oracle: integrate the standard normal density over [z, z + 16] with
    // 8-point Gauss panels (the remaining tail is below 1e-58)
    auto oracle = [](double z) {
        double acc = 0.0;
        const int panels = 64;
        for (int p = 0; p < panels; ++p) {
            const double a = z + 16.0 * p / panels;
            const double c = z + 16.0 * (p + 1) / panels;
            acc += gauss8([](double u) { return kInvSqrt2Pi * std::exp(-0.5 * u * u); }, a, c);
        }
        return acc;
    };
    for (double z : {-2.0, -0.5, 0.0, 0.7, 1.5, 3.0})
        CHECK(std::abs(normal_tail(z) - oracle(z)) < 1e-12);
    CHECK(std::abs(normal_tail(1.959964) - 0.025) < 1e-6);
}

TEST_CASE("convolution of the initial datum") {
    const InitialDatum quartic = make_initial_datum(1.0);

    SUBCASE("zero datum") {
        InitialDatum zero = quartic;
        zero.h = [](double) { return 0.0; };
        for (double t : {0.01, 0.25})
            for (double x : {0.5, 1.0, 2.0}) CHECK(convolve_initial(zero, x, t) == 0.0);
    }

    SUBCASE("approximate identity as t -> 0 at interior points") {
        for (double x : {1.5, 2.0, 3.0})
            CHECK(convolve_initial(quartic, x, 1e-6) ==
                  doctest::Approx(quartic.h(x)).epsilon(1e-5));
    }

    SUBCASE("Chapman-Kolmogorov semigroup identity") {
        const double x0 = 2.0;
        for (double s : {0.1, 0.5}) {
            const double w = 10.0 * std::sqrt(s);
            auto f = [&](double xi) { return heat_kernel(xi, s, x0, 0.0); };
            for (double t : {0.05, 0.3})
                for (double x : {1.0, 2.0, 2.7}) {
                    const double composed = convolve_support(f, x0 - w, x0 + w, x, t);
                    CHECK(std::abs(composed - heat_kernel(x, t + s, x0, 0.0)) < 1e-10);
                }
        }
    }

    SUBCASE("domain error at t <= 0") {
        CHECK_THROWS_AS((void)convolve_initial(quartic, 1.0, 0.0), std::domain_error);
        CHECK_THROWS_AS((void)convolve_initial(quartic, 1.0, -1.0), std::domain_error);
    }
}
