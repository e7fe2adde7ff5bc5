#include <doctest.h>

#include <cmath>
#include <random>

#include "fbp/density.hpp"
#include "fbp/errors.hpp"
#include "fbp/fixed_point.hpp"
#include "fbp/kernels.hpp"

using namespace fbp;

namespace {

const double kB = 1.0;
const double kT = 0.25;

InitialDatum zero_datum(double b) {
    InitialDatum d;
    d.b = b;
    d.support_width = 1.0;
    d.rho0 = [](double) { return 0.0; };
    d.h = [](double) { return 0.0; };
    d.h_prime = [](double) { return 0.0; };
    return d;
}

BoundaryCurve wave_curve(const TimeGrid& grid, double b, double c, double budget) {
    std::vector<double> vals(grid.nodes.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = b + c * grid.nodes[i];
    return {grid, std::move(vals), budget};
}

} // namespace

TEST_CASE("lipschitz seminorm") {
    SUBCASE("constant curve") {
        const TimeGrid grid = TimeGrid::uniform(kT, 16);
        CHECK(lipschitz_seminorm(flat_curve(grid, kB, 1.0)) == 0.0);
    }
    SUBCASE("linear curve has its exact slope") {
        const TimeGrid grid = TimeGrid::graded(kT, 64);
        CHECK(lipschitz_seminorm(wave_curve(grid, kB, kSqrt2, 3.0)) ==
              doctest::Approx(kSqrt2).epsilon(1e-13));
    }
    SUBCASE("sin curve on [0,1]: max slope is cos(0) = 1") {
        const TimeGrid grid = TimeGrid::uniform(1.0, 256);
        std::vector<double> vals(grid.nodes.size());
        for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = kB + std::sin(grid.nodes[i]);
        CHECK(lipschitz_seminorm({grid, vals, 2.0}) == doctest::Approx(1.0).epsilon(1e-3));
    }
}

TEST_CASE("map K on the degenerate zero-source configuration") {
    const TimeGrid grid = TimeGrid::uniform(kT, 32);
    const FieldOptions opts{.zero_boundary_source = true};
    const BoundaryCurve image = apply_K(flat_curve(grid, kB, 1.0), zero_datum(kB), opts);
    for (double v : image.values) CHECK(v == kB);
}

TEST_CASE("map K reproduces the traveling wave") {
    const TimeGrid grid = TimeGrid::uniform(kT, 256);
    const InitialDatum datum = make_wave_datum(kB, kSqrt2);
    const BoundaryCurve curve = wave_curve(grid, kB, kSqrt2, 3.0);
    const BoundaryCurve image = apply_K(curve, datum);
    double sup = 0.0;
    for (std::size_t i = 0; i < image.values.size(); ++i) {
        sup = std::max(sup, std::abs(image.values[i] - curve.values[i]));
        if (i > 0) CHECK(image.values[i] > image.values[i - 1]); // strictly increasing
    }
    CHECK(sup < 1e-2);
}

TEST_CASE("solve_fbp on the zero-source configuration converges immediately") {
    SolverConfig cfg;
    cfg.b = kB;
    cfg.grid_size = 32;
    const FbpSolution sol = solve_fbp(cfg, zero_datum(kB), {.zero_boundary_source = true});
    CHECK(sol.report.iterates == 1);
    for (double v : sol.curve.values) CHECK(v == kB);
}

TEST_CASE("solve_fbp tracks the traveling wave") {
    SolverConfig cfg;
    cfg.b = kB;
    const InitialDatum datum = make_wave_datum(kB, kSqrt2);
    const FbpSolution sol = solve_fbp(cfg, datum);
    CHECK(sol.report.converged);
    double sup = 0.0;
    for (std::size_t i = 0; i < sol.curve.values.size(); ++i)
        sup = std::max(sup,
                       std::abs(sol.curve.values[i] - (kB + kSqrt2 * sol.curve.grid.nodes[i])));
    CHECK(sup < 5e-3);
    // residual history decreasing with ratio < 1
    const auto& hist = sol.report.residual_history;
    REQUIRE(hist.size() >= 6);
    for (int i = 0; i < 5; ++i) CHECK(hist[i + 1] < hist[i]);
    for (double r : sol.report.contraction_ratios) CHECK(r < 1.0);
    CHECK(sol.report.lipschitz_seminorm <= cfg.lipschitz_budget);
    CHECK(sol.report.sup_q <= 2.0 * sol.report.gronwall_bound);
}

TEST_CASE("budget violations") {
    const InitialDatum datum = make_wave_datum(kB, kSqrt2);
    SolverConfig cfg;
    cfg.b = kB;
    cfg.grid_size = 32;
    cfg.lipschitz_budget = 0.5; // below the wave slope sqrt(2)
    SUBCASE("without horizon adaptivity the budget error propagates") {
        cfg.adaptive_horizon = false;
        CHECK_THROWS_AS((void)solve_fbp(cfg, datum), BudgetError);
    }
    SUBCASE("with adaptivity the halving cap is exhausted") {
        cfg.adaptive_horizon = true;
        CHECK_THROWS_AS((void)solve_fbp(cfg, datum), NoConvergenceError);
    }
}

TEST_CASE("max_iter exhaustion reports the residual history") {
    SolverConfig cfg;
    cfg.b = kB;
    cfg.grid_size = 32;
    cfg.max_iter = 1;
    try {
        (void)solve_fbp(cfg, make_initial_datum(kB));
        FAIL("expected NoConvergenceError");
    } catch (const NoConvergenceError& e) {
        CHECK(e.residual_history.size() == 1);
        CHECK(e.residual_history[0] > 0.0);
    }
}

TEST_CASE("lipschitz budget recommendation") {
    SUBCASE("quartic datum at T = 0.25 matches an independent evaluation") {
        const InitialDatum datum = make_initial_datum(kB);
        // independently computed sup |h'| = 12/s at the left edge
        const double s = std::sqrt(10.0);
        CHECK(sup_h_prime(datum) == doctest::Approx(12.0 / s).epsilon(1e-6));
        const double c2 = 4.0 * kInvSqrt2Pi, c3 = 12.0 / s, rt = std::sqrt(kT);
        const double base = 0.25 * std::exp(kT) * 1.5;
        double expected = base * (c2 * rt + c3);
        for (int sweep = 0; sweep < 3; ++sweep) {
            const double c1 = expected * kInvSqrt2Pi;
            expected = base * (1.0 + 2.0 * c1 * rt) * std::exp(kPi * c1 * c1 * kT) *
                       (c2 * rt + c3);
            if (expected >= 1e6) {
                expected = 1e6;
                break;
            }
        }
        CHECK(lipschitz_budget(datum, kT) == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("zero datum, T -> 0: small positive recommendation") {
        const double a = lipschitz_budget(zero_datum(kB), 1e-6);
        CHECK(a > 0.0);
        CHECK(a < 1e-2);
    }
    SUBCASE("doubling sup |h'| adds at least C3/4 e^T") {
        InitialDatum d1 = make_initial_datum(kB);
        InitialDatum d2 = d1;
        const auto h_prime = d1.h_prime;
        d2.h_prime = [h_prime](double x) { return 2.0 * h_prime(x); };
        const double c3 = sup_h_prime(d1);
        CHECK(lipschitz_budget(d2, kT) - lipschitz_budget(d1, kT) >=
              0.25 * c3 * std::exp(kT) - 1e-12);
    }
}

TEST_CASE("empirical continuity of K over a randomized curve ensemble") {
    const TimeGrid grid = TimeGrid::uniform(kT, 64);
    const InitialDatum datum = make_initial_datum(kB);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> slope(-1.0, 1.0);
    double worst_ratio = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<double> v1(grid.nodes.size()), v2(grid.nodes.size());
        v1[0] = v2[0] = kB;
        for (std::size_t i = 1; i < v1.size(); ++i) {
            const double dt = grid.nodes[i] - grid.nodes[i - 1];
            const double s = slope(rng);
            v1[i] = v1[i - 1] + s * dt;
            v2[i] = v2[i - 1] + (s + 0.05 * slope(rng)) * dt;
        }
        const BoundaryCurve c1{grid, v1, 3.0}, c2{grid, v2, 3.0};
        const BoundaryCurve k1 = apply_K(c1, datum), k2 = apply_K(c2, datum);
        double dk = 0.0, dl = 0.0;
        for (std::size_t i = 0; i < v1.size(); ++i) {
            dk = std::max(dk, std::abs(k1.values[i] - k2.values[i]));
            dl = std::max(dl, std::abs(c1.values[i] - c2.values[i]));
        }
        if (dl > 0.0) worst_ratio = std::max(worst_ratio, dk / dl);
    }
    MESSAGE("measured continuity constant of K: ", worst_ratio);
    CHECK(std::isfinite(worst_ratio));
    CHECK(worst_ratio < 50.0);
}

TEST_CASE("boundary second differences stay bounded under refinement") {
    SolverConfig cfg;
    cfg.b = kB;
    const InitialDatum datum = make_initialum_or_default();
    // report-only smoothness diagnostic
}
