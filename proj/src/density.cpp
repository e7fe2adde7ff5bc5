#include "fbp/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fbp/kernels.hpp"
#include "fbp/quadrature.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fbp {

double TravelingWave::value(double u) const {
    if (u < 0.0) return 0.0;
    if (degenerate) return 2.0 * u * std::exp(lam1 * u);
    return amplitude * (std::exp(lam1 * u) - std::exp(lam2 * u));
}

double TravelingWave::deriv(double u) const {
    if (u < 0.0) return 0.0;
    if (degenerate) return 2.0 * std::exp(lam1 * u) * (1.0 + lam1 * u);
    return amplitude * (lam1 * std::exp(lam1 * u) - lam2 * std::exp(lam2 * u));
}

double TravelingWave::second_deriv(double u) const {
    if (u < 0.0) return 0.0;
    if (degenerate) return 2.0 * std::exp(lam1 * u) * lam1 * (2.0 + lam1 * u);
    return amplitude * (lam1 * lam1 * std::exp(lam1 * u) - lam2 * lam2 * std::exp(lam2 * u));
}

double TravelingWave::tail_mass(double u0) const {
    if (u0 < 0.0) u0 = 0.0;
    if (degenerate) {
        // int_{u0}^inf 2 u e^{lam u} du, lam < 0
        const double l = lam1;
        return 2.0 * std::exp(l * u0) * (u0 / (-l) + 1.0 / (l * l));
    }
    return amplitude * (-std::exp(lam1 * u0) / lam1 + std::exp(lam2 * u0) / lam2);
}

TravelingWave traveling_wave(double c) {
    if (c < kSqrt2 - 1e-12)
        throw std::domain_error("traveling_wave: speed below sqrt(2) gives a sign-changing profile");
    TravelingWave w;
    w.speed = c;
    const double disc = c * c - 2.0;
    if (disc < 1e-12) {
        w.degenerate = true;
        w.lam1 = w.lam2 = -kSqrt2;
        w.amplitude = 2.0;
        return w;
    }
    const double root = std::sqrt(disc);
    w.lam1 = -c + root;
    w.lam2 = -c - root;
    w.amplitude = 2.0 / (w.lam1 - w.lam2);
    return w;
}

InitialDatum make_initial_datum(double b) {
    const double s = std::sqrt(10.0);
    InitialDatum d;
    d.b = b;
    d.support_width = s;
    d.rho0 = [b, s](double x) {
        const double u = x - b;
        if (u < 0.0 || u > s) return 0.0;
        const double r = 1.0 - u / s;
        return 2.0 * u * r * r * r;
    };
    d.h = [b, s](double x) {
        const double u = x - b;
        if (u < 0.0 || u > s) return 0.0;
        const double r = 1.0 - u / s;
        return 2.0 * r * r * r - 6.0 * u / s * r * r;
    };
    d.h_prime = [b, s](double x) {
        const double u = x - b;
        if (u < 0.0 || u > s) return 0.0;
        const double r = 1.0 - u / s;
        return -12.0 / s * r * r + 12.0 * u / (s * s) * r;
    };
    validate_initial_datum(d);
    return d;
}

InitialDatum make_wave_datum(double b, double c, double u_max) {
    const TravelingWave w = traveling_wave(c);
    if (!(u_max > 0.0)) throw std::invalid_argument("make_wave_datum: u_max must be positive");
    const double z = 1.0 - w.tail_mass(u_max); // retained mass
    InitialDatum d;
    d.b = b;
    d.support_width = u_max;
    d.rho0 = [w, b, u_max, z](double x) {
        const double u = x - b;
        if (u < 0.0 || u > u_max) return 0.0;
        return w.value(u) / z;
    };
    d.h = [w, b, u_max, z](double x) {
        const double u = x - b;
        if (u < 0.0 || u > u_max) return 0.0;
        return w.deriv(u) / z;
    };
    d.h_prime = [w, b, u_max, z](double x) {
        const double u = x - b;
        if (u < 0.0 || u > u_max) return 0.0;
        return w.second_deriv(u) / z;
    };
    validate_initial_datum(d);
    return d;
}

double reconstruct_rho(const FieldSolution& field, double x, double t) {
    const double lt = field.curve(t);
    if (x < lt - 1e-12) throw std::domain_error("reconstruct_rho: x below the boundary");
    if (x <= lt) return 0.0;
    const double integral = adaptive_gauss8(
        [&](double y) { return evaluate_v(field, y, t); }, lt, x, 1e-10);
    return std::exp(t) * integral;
}

double rho_direct(const FieldSolution& field, double x, double t) {
    const double lt = field.curve(t);
    if (x < lt - 1e-12) throw std::domain_error("rho_direct: x below the boundary");
    const double w = single_layer_potential(field.phi, field.curve, x, t);
    // int h(xi) Psi((x-xi)/sqrt t) dxi over the support; Psi is not localized
    // to the left of x, so no tail window applies.
    const double st = std::sqrt(t);
    const double lo = field.datum.b;
    const double hi = field.datum.b + field.datum.support_width;
    const int panels = std::min(4096, std::max(8, (int)std::ceil((hi - lo) / (0.5 * st))));
    double conv = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + (hi - lo) * p / panels;
        const double cc = lo + (hi - lo) * (p + 1) / panels;
        conv += gauss8(
            [&](double xi) { return field.datum.h(xi) * normal_tail((x - xi) / st); }, a, cc);
    }
    return std::exp(t) * (w - conv);
}

double x_max(const FieldSolution& field) {
    return field.datum.b + field.datum.support_width +
           8.0 * std::sqrt(field.curve.grid.horizon());
}

namespace {

// shared composite rule for the conservation integrals: 64 panels of
// 8-point Gauss over [L_t, x_max], v evaluated in parallel, reduced serially
std::vector<double> conservation_nodes(const FieldSolution& field, double t, double xm,
                                       std::vector<double>& weights) {
    const double lt = field.curve(t);
    const int panels = 64;
    std::vector<double> xs(panels * 8);
    weights.resize(panels * 8);
    const double dx = (xm - lt) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = lt + p * dx;
        for (int g = 0; g < 8; ++g) {
            xs[p * 8 + g] = a + 0.5 * dx * (1.0 + kGauss8Nodes[g]);
            weights[p * 8 + g] = 0.5 * dx * kGauss8Weights[g];
        }
    }
    return xs;
}

} // namespace

Conservation conservation(const FieldSolution& field, double t) {
    const double xm = x_max(field);
    std::vector<double> w;
    const std::vector<double> xs = conservation_nodes(field, t, xm, w);
    const std::vector<double> v = evaluate_v_many(field, xs, t);
    Conservation out{0.0, 0.0};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out.mass += w[i] * (xm - xs[i]) * v[i];
        out.v_mass += w[i] * v[i];
    }
    out.mass *= std::exp(t);
    return out;
}

double mass(const FieldSolution& field, double t) { return conservation(field, t).mass; }

double v_mass(const FieldSolution& field, double t) { return conservation(field, t).v_mass; }

double boundary_slope(const FieldSolution& field, double t) {
    const double lt = field.curve(t);
    const double eps0 = (x_max(field) - field.datum.b) / 2048.0;
    const double r1 = reconstruct_rho(field, lt + eps0, t);
    const double r2 = reconstruct_rho(field, lt + 2.0 * eps0, t);
    const double r4 = reconstruct_rho(field, lt + 4.0 * eps0, t);
    const double d1 = r1 / eps0, d2 = r2 / (2.0 * eps0), d4 = r4 / (4.0 * eps0);
    const double ra = 2.0 * d1 - d2;
    const double rb = 2.0 * d2 - d4;
    return (4.0 * ra - rb) / 3.0;
}

double boundary_curvature(const FieldSolution& field, double t) {
    const double lt = field.curve(t);
    const double eps0 = (x_max(field) - field.datum.b) / 2048.0;
    const double r1 = reconstruct_rho(field, lt + eps0, t);
    const double r2 = reconstruct_rho(field, lt + 2.0 * eps0, t);
    const double r4 = reconstruct_rho(field, lt + 4.0 * eps0, t);
    // rho(L_t) = 0; one-sided second difference, Richardson over {eps, 2eps}
    const double d2a = (r2 - 2.0 * r1) / (eps0 * eps0);
    const double d2b = (r4 - 2.0 * r2) / (4.0 * eps0 * eps0);
    return 2.0 * d2a - d2b;
}

StefanCheck stefan_velocity_check(const FieldSolution& field, double t) {
    const auto& grid = field.curve.grid;
    const double T = grid.horizon();
    const double dt = T / grid.intervals();
    if (!(t > dt) || !(t < T - dt))
        throw std::domain_error("stefan_velocity_check: t must be interior to (0,T)");
    const double lhs = (field.curve(t + dt) - field.curve(t - dt)) / (2.0 * dt);
    const double rhs = -0.25 * boundary_curvature(field, t);
    return {lhs, rhs};
}

DensitySnapshot make_snapshot(const FieldSolution& field, double t, int nodes,
                              ExecPolicy policy) {
    if (nodes < 8) throw std::invalid_argument("make_snapshot: too few nodes");
    DensitySnapshot snap;
    snap.t = t;
    const double lt = field.curve(t);
    const double xm = x_max(field);
    snap.x_nodes.resize(nodes);
    for (int i = 0; i < nodes; ++i) {
        const double r = double(i) / (nodes - 1);
        snap.x_nodes[i] = lt + (xm - lt) * r * r; // quadratic clustering at L_t
    }
    snap.v_values = evaluate_v_many(field, snap.x_nodes, t, policy);
    snap.rho_values.resize(nodes);
    snap.rho_values[0] = 0.0;
    const double et = std::exp(t);
    for (int i = 1; i < nodes; ++i) {
        const double dx = snap.x_nodes[i] - snap.x_nodes[i - 1];
        snap.rho_values[i] = snap.rho_values[i - 1] +
                             0.5 * et * (snap.v_values[i] + snap.v_values[i - 1]) * dx;
    }
    double m = 0.0;
    for (int i = 1; i < nodes; ++i)
        m += 0.5 * (snap.rho_values[i] + snap.rho_values[i - 1]) *
             (snap.x_nodes[i] - snap.x_nodes[i - 1]);
    snap.mass = m;
    snap.boundary_slope = boundary_slope(field, t);
    snap.boundary_curvature = boundary_curvature(field, t);
    return snap;
}

double DensityCdf::operator()(double xq) const {
    if (xq <= x.front()) return 0.0;
    if (xq >= x.back()) return 1.0;
    const auto it = std::upper_bound(x.begin(), x.end(), xq);
    const std::size_t j = it - x.begin() - 1;
    const double w = (xq - x[j]) / (x[j + 1] - x[j]);
    return F[j] + w * (F[j + 1] - F[j]);
}

double DensityCdf::quantile(double p) const {
    if (p <= 0.0) return x.front();
    if (p >= 1.0) return x.back();
    const auto it = std::upper_bound(F.begin(), F.end(), p);
    std::size_t j = it - F.begin();
    if (j == 0) return x.front();
    if (j >= F.size()) return x.back();
    --j;
    const double df = F[j + 1] - F[j];
    const double w = (df > 0.0) ? (p - F[j]) / df : 0.0;
    return x[j] + w * (x[j + 1] - x[j]);
}

DensityCdf make_cdf(const DensitySnapshot& snapshot) {
    DensityCdf cdf;
    cdf.x = snapshot.x_nodes;
    cdf.F.resize(cdf.x.size());
    cdf.F[0] = 0.0;
    for (std::size_t i = 1; i < cdf.x.size(); ++i) {
        const double inc = 0.5 * (snapshot.rho_values[i] + snapshot.rho_values[i - 1]);
        const double dx = cdf.x[i] - cdf.x[i - 1];
        cdf.F[i] = cdf.F[i - 1] + std::max(0.0, inc) * dx; // monotone by construction
    }
    const double total = cdf.F.back();
    if (total > 0.0)
        for (double& f : cdf.F) f /= total;
    return cdf;
}

DensityCdf make_initial_cdf(const InitialDatum& datum, int table_size) {
    DensityCdf cdf;
    cdf.x.resize(table_size + 1);
    cdf.F.resize(table_size + 1);
    const double lo = datum.b, hi = datum.b + datum.support_width;
    cdf.x[0] = lo;
    cdf.F[0] = 0.0;
    double prev = datum.rho0(lo);
    for (int i = 1; i <= table_size; ++i) {
        cdf.x[i] = lo + (hi - lo) * i / table_size;
        const double cur = datum.rho0(cdf.x[i]);
        cdf.F[i] = cdf.F[i - 1] +
                   std::max(0.0, 0.5 * (prev + cur)) * (cdf.x[i] - cdf.x[i - 1]);
        prev = cur;
    }
    const double total = cdf.F.back();
    if (total > 0.0)
        for (double& f : cdf.F) f /= total;
    return cdf;
}

} // namespace fbp
