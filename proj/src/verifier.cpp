#include "bohr/verifier.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bohr {

namespace {

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (std::size_t n = c.size(); n-- > 0;) acc = acc * z + c[n];
    return acc;
}

std::string fmt(double x, int digits = 12) {
    std::ostringstream out;
    out.precision(digits);
    out << x;
    return out.str();
}

std::string label(const char* what, const ClassSpec& spec) {
    return std::string(what) + " " + std::string(tag_name(spec.tag)) + " " + describe(spec);
}

// Smallest power-of-two truncation whose tail bound at r is below `bound`.
long truncation_for(const ClassSpec& spec, double r, double bound) {
    long n = std::max<long>(64, start_index(spec));
    while (n < (1L << 24)) {
        const ExtremalFunction probe{n, {}, {}, spec.tag == ClassTag::TbM
                                                  ? 0.0
                                                  : coefficient_bound(spec, n + 1)};
        if (probe.truncation_bound(r) <= bound) break;
        n *= 2;
    }
    return n;
}

}  // namespace

ExtremalValue evaluate_extremal(const ExtremalFunction& f, std::complex<double> z) {
    const double r = std::abs(z);
    if (!(r < 1.0)) throw DomainError("evaluate_extremal: |z| must be < 1");
    const std::complex<double> w = horner(f.a, z) + std::conj(horner(f.b, z));
    return {std::abs(w), f.truncation_bound(r)};
}

OracleEstimate distance_oracle(const ClassSpec& spec, double rho, int grid, long truncation) {
    validate(spec);
    if (!(rho > 0.0 && rho < 1.0)) throw DomainError("distance_oracle: rho must be in (0, 1)");
    if (grid < 8) throw DomainError("distance_oracle: grid must be >= 8");
    const ExtremalFunction f = extremal_coefficients(spec, truncation);

    OracleEstimate est;
    est.truncation_n = truncation;
    est.grid_size = grid;
    est.rho = rho;
    est.value = std::numeric_limits<double>::infinity();
    for (int j = 0; j < grid; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / grid;
        const double v = evaluate_extremal(f, std::polar(rho, theta)).modulus;
        if (v < est.value) {
            est.value = v;
            est.argmin = theta;
        }
    }
    est.truncation_bound = f.truncation_bound(rho);
    return est;
}

CheckReport sharpness_check(const ClassSpec& spec, double tol, const SolverConfig& cfg) {
    const RadiusResult res = solve_radius(spec, cfg);
    const SeriesValue sum = bohr_sum(spec, res.radius, cfg.series_tol);
    const SeriesValue d = distance_bound(spec, cfg.series_tol);
    const double gap = std::abs(sum.value - d.value);
    return {label("sharpness", spec), gap <= tol,
            "r_f=" + fmt(res.radius) + " |B(r_f)-d*|=" + fmt(gap, 3) + " tol=" + fmt(tol, 3)};
}

ScanReport bohr_scan(const ClassSpec& spec, double r_max, int steps, const SolverConfig& cfg) {
    if (!(r_max > 0.0 && r_max < 1.0)) throw DomainError("bohr_scan: r_max must be in (0, 1)");
    if (steps < 1) throw DomainError("bohr_scan: steps must be >= 1");
    ScanReport rep;
    rep.spec = spec;
    rep.radius = solve_radius(spec, cfg).radius;
    rep.step = r_max / steps;
    const SeriesValue d = distance_bound(spec, cfg.series_tol);
    rep.grid.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        const double r = r_max * i / steps;
        const SeriesValue b = bohr_sum(spec, r, cfg.series_tol);
        const double slack = 1e-12 + b.error_bound + d.error_bound;
        const bool ok = b.value <= d.value + slack;
        rep.grid.push_back({r, b.value, d.value, ok});
        if (!ok && !rep.first_violation) rep.first_violation = r;
    }
    constexpr double eps = 1e-9;
    if (rep.first_violation)
        rep.consistent = *rep.first_violation > rep.radius - eps &&
                         *rep.first_violation <= rep.radius + rep.step + eps;
    else
        rep.consistent = r_max <= rep.radius + eps;
    return rep;
}

CheckReport envelope_check(const ClassSpec& spec, std::span<const double> samples, double tol) {
    validate(spec);
    CheckReport rep{label("envelope", spec), true, ""};
    const double touch = lower_touch_angle(spec);
    double worst = 0.0;
    for (double r : samples) {
        if (!(r > 0.0 && r < 1.0)) throw DomainError("envelope_check: samples must be in (0, 1)");
        const ExtremalFunction f = extremal_coefficients(spec, truncation_for(spec, r, 0.1 * tol));
        const GrowthEnvelope env = growth_envelope(spec, r, 0.1 * tol);
        const ExtremalValue lo = evaluate_extremal(f, std::polar(r, touch));
        const ExtremalValue hi = evaluate_extremal(f, r);
        const double slack = tol + lo.truncation_bound + env.error_bound;

        const double lo_gap = std::abs(lo.modulus - env.lower);
        const double hi_gap = std::abs(hi.modulus - env.upper);
        worst = std::max({worst, lo_gap, hi_gap});
        bool ok = lo_gap <= slack && hi_gap <= slack;
        for (int j = 0; j < 32 && ok; ++j) {
            const double theta = 2.0 * std::numbers::pi * (j + 0.5) / 32.0;
            const double v = evaluate_extremal(f, std::polar(r, theta)).modulus;
            ok = v >= env.lower - slack && v <= env.upper + slack;
        }
        if (!ok) {
            rep.passed = false;
            rep.detail = "violated at r=" + fmt(r) + " lower=" + fmt(env.lower) +
                         " |f(touch)|=" + fmt(lo.modulus) + " upper=" + fmt(env.upper) +
                         " |f(r)|=" + fmt(hi.modulus);
            return rep;
        }
    }
    rep.detail = std::to_string(samples.size()) + " radii, max touch gap " + fmt(worst, 3);
    return rep;
}

double jacobian_functional_extremal(double m, std::complex<double> z) {
    const double r = std::abs(z);
    const std::complex<double> f = z + 0.5 * m * z * z;
    const std::complex<double> dh = 1.0 + m * z;
    return std::abs(f) + std::abs(dh) * r + 0.5 * m * r * r;
}

CheckReport jacobian_containment_check(double m, std::span<const double> samples) {
    CheckReport rep{"jacobian tb-m M=" + fmt(m), true, ""};
    double worst_touch = 0.0;
    for (double r : samples) {
        const double bound = jacobian_functional(m, r);
        for (int j = 0; j < 64; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / 64.0;
            const double v = jacobian_functional_extremal(m, std::polar(r, theta));
            if (v > bound + 1e-14) {
                rep.passed = false;
                rep.detail = "exceeds 2Mr^2+2r at r=" + fmt(r) + " theta=" + fmt(theta);
                return rep;
            }
        }
        worst_touch = std::max(worst_touch, std::abs(jacobian_functional_extremal(m, r) - bound));
    }
    rep.passed = worst_touch <= 1e-14;
    rep.detail = "max gap at z=r " + fmt(worst_touch, 3);
    return rep;
}

}  // namespace bohr
