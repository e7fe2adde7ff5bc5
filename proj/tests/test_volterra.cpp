#include <doctest.h>

#include <cmath>

#include "fbp/errors.hpp"
#include "fbp/kernels.hpp"
#include "fbp/volterra.hpp"

using namespace fbp;

namespace {

GridFunction constant_forcing(const TimeGrid& grid, double c) {
    return {grid, std::vector<double>(grid.nodes.size(), c)};
}

double sup_diff(const GridFunction& a, const GridFunction& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

SingularKernel abel_kernel(double lambda) {
    return {[lambda](double, double) { return lambda; }, std::abs(lambda)};
}

} // namespace

TEST_CASE("time grids") {
    const TimeGrid u = TimeGrid::uniform(0.25, 4);
    CHECK(u.nodes == std::vector<double>{0.0, 0.0625, 0.125, 0.1875, 0.25});
    CHECK(u.interval_of(0.1) == 1);
    CHECK(u.interval_of(0.25) == 3);
    const TimeGrid g = TimeGrid::graded(1.0, 4);
    CHECK(g.nodes[1] == doctest::Approx(1.0 / 16));
    CHECK(g.nodes[2] == doctest::Approx(0.25));
    CHECK_THROWS(TimeGrid::uniform(-1.0, 4));
    CHECK_THROWS(TimeGrid::uniform(1.0, 0));
}

TEST_CASE("vanishing kernel returns the forcing") {
    const TimeGrid grid = TimeGrid::uniform(0.25, 32);
    const SingularKernel none{[](double, double) { return 0.0; }, 0.0};
    SUBCASE("constant") {
        const GridFunction phi = solve_weakly_singular(none, constant_forcing(grid, 3.5), grid);
        for (double v : phi.values) CHECK(v == 3.5);
    }
    SUBCASE("linear") {
        std::vector<double> vals(grid.nodes.size());
        for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = grid.nodes[i];
        const GridFunction phi = solve_weakly_singular(none, {grid, vals}, grid);
        for (std::size_t i = 0; i < vals.size(); ++i) CHECK(phi.values[i] == grid.nodes[i]);
    }
}

TEST_CASE("picard series oracle") {
    const TimeGrid grid = TimeGrid::uniform(0.25, 16);
    SUBCASE("lambda = 0 gives the constant 1") {
        const GridFunction o = picard_series_oracle(0.0, grid, 5);
        for (double v : o.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("one term at lambda = 1 is 1 + 2 sqrt t") {
        const GridFunction o = picard_series_oracle(1.0, grid, 1, /*remainder_tol=*/1e9);
        for (std::size_t i = 0; i < o.values.size(); ++i)
            CHECK(o.values[i] ==
                  doctest::Approx(1.0 + 2.0 * std::sqrt(grid.nodes[i])).epsilon(1e-14));
    }
    SUBCASE("remainder gate") {
        CHECK_THROWS_AS((void)picard_series_oracle(1.0, grid, 2), SeriesConvergenceError);
        CHECK_NOTHROW((void)picard_series_oracle(0.5, grid, 25));
    }
}

TEST_CASE("pure Abel problem against the series oracle") {
    const double lambda = 0.5, T = 0.25;
    SUBCASE("graded grid reaches 1e-6") {
        const TimeGrid grid = TimeGrid::graded(T, 512);
        const GridFunction oracle = picard_series_oracle(lambda, grid, 25);
        const GridFunction phi =
            solve_weakly_singular(abel_kernel(lambda), constant_forcing(grid, 1.0), grid);
        CHECK(sup_diff(phi, oracle) < 1e-6);
    }
    SUBCASE("uniform grid converges at first order or better") {
        double prev = 0.0;
        for (int m : {128, 256, 512, 1024}) {
            const TimeGrid grid = TimeGrid::uniform(T, m);
            const GridFunction oracle = picard_series_oracle(lambda, grid, 25);
            const GridFunction phi =
                solve_weakly_singular(abel_kernel(lambda), constant_forcing(grid, 1.0), grid);
            const double err = sup_diff(phi, oracle);
            if (prev > 0.0) CHECK(prev / err >= 1.8);
            prev = err;
        }
    }
}

TEST_CASE("causality of the marching solve") {
    const TimeGrid grid = TimeGrid::uniform(0.25, 64);
    const SingularKernel k = abel_kernel(0.3);
    GridFunction f1 = constant_forcing(grid, 1.0);
    GridFunction f2 = f1;
    const int j = 40;
    f2.values[j] += 1.0;
    const GridFunction p1 = solve_weakly_singular(k, f1, grid);
    const GridFunction p2 = solve_weakly_singular(k, f2, grid);
    for (int i = 0; i < j; ++i) CHECK(p1.values[i] == p2.values[i]);
    CHECK(p2.values[j] != p1.values[j]);
}

TEST_CASE("linearity of the solve") {
    const TimeGrid grid = TimeGrid::uniform(0.25, 64);
    const SingularKernel k = abel_kernel(0.4);
    GridFunction f1 = constant_forcing(grid, 1.0);
    GridFunction f2 = f1;
    for (std::size_t i = 0; i < f2.values.size(); ++i) f2.values[i] = std::cos(3.0 * grid.nodes[i]);
    const double a = 1.7, b = -0.6;
    GridFunction combo = f1;
    for (std::size_t i = 0; i < combo.values.size(); ++i)
        combo.values[i] = a * f1.values[i] + b * f2.values[i];
    const GridFunction pa = solve_weakly_singular(k, f1, grid);
    const GridFunction pb = solve_weakly_singular(k, f2, grid);
    const GridFunction pc = solve_weakly_singular(k, combo, grid);
    for (std::size_t i = 0; i < pc.values.size(); ++i)
        CHECK(pc.values[i] ==
              doctest::Approx(a * pa.values[i] + b * pb.values[i]).epsilon(1e-12));
}

TEST_CASE("discrete Picard iteration contracts at rate 2 |lambda| sqrt(T)") {
    const double lambda = 0.5, T = 0.25;
    const TimeGrid grid = TimeGrid::uniform(T, 128);
    const auto pic =
        solve_by_picard_iteration(abel_kernel(lambda), constant_forcing(grid, 1.0), grid, 60, 1e-13);
    const double bound = 2.0 * lambda * std::sqrt(T) + 0.1;
    REQUIRE(pic.update_norms.size() > 6);
    for (std::size_t i = 3; i + 1 < pic.update_norms.size(); ++i) {
        if (pic.update_norms[i] < 1e-12) break;
        CHECK(pic.update_norms[i + 1] / pic.update_norms[i] <= bound);
    }
    const GridFunction direct =
        solve_weakly_singular(abel_kernel(lambda), constant_forcing(grid, 1.0), grid);
    CHECK(sup_diff(pic.solution, direct) < 1e-10);
}

TEST_CASE("ill-conditioned diagonal raises the singular-step error") {
    const TimeGrid grid = TimeGrid::uniform(0.25, 16);
    const double dt = 0.25 / 16;
    // choose k so that 1 - (4/3) sqrt(dt) k(t,t) == 0
    const double bad = 0.75 / std::sqrt(dt);
    const SingularKernel k{[bad](double, double) { return bad; }, bad};
    CHECK_THROWS_AS((void)solve_weakly_singular(k, constant_forcing(grid, 1.0), grid),
                    SingularStepError);
}
