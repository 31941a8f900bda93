#include "bohr/radius.hpp"

#include <cmath>
#include <sstream>

namespace bohr {

std::string_view method_name(Method m) {
    return m == Method::ClosedForm ? "CLOSED_FORM" : "BISECTION_NEWTON";
}

BohrEquation::BohrEquation(const ClassSpec& spec, const SolverConfig& cfg)
    : spec_(spec), cfg_(cfg) {
    validate(spec_);
    if (!(cfg.tol > 0.0) || !(cfg.series_tol > 0.0) || cfg.max_iter < 1)
        throw DomainError("SolverConfig: tolerances must be positive and max_iter >= 1");
    d_star_ = distance_bound(spec_, cfg_.series_tol);
}

SeriesValue BohrEquation::operator()(double r) const {
    const SeriesValue sum = bohr_sum(spec_, r, cfg_.series_tol);
    return {sum.value - d_star_.value, sum.error_bound + d_star_.error_bound};
}

double BohrEquation::derivative(double r) const { return bohr_sum_derivative(spec_, r); }

bool BohrEquation::certainly_positive(double r) const {
    const double target = d_star_.value + d_star_.error_bound;
    return bohr_sum_lower_bound(spec_, r, target) > target;
}

BohrEquation build_equation(const ClassSpec& spec, const SolverConfig& cfg) {
    return BohrEquation(spec, cfg);
}

RadiusResult solve_by_bisection(const BohrEquation& eq, const SolverConfig& cfg) {
    RadiusResult out;
    out.d_star = eq.distance().value;

    const SeriesValue at_zero = eq(0.0);
    if (at_zero.value >= 0.0) {
        // d* <= 0: the inequality only holds at the origin.
        out.residual = std::abs(at_zero.value);
        out.series_error = at_zero.error_bound;
        out.method = Method::ClosedForm;
        return out;
    }
    double lo = 0.0;
    double hi = bracket_upper;
    if (!eq.certainly_positive(hi)) {
        throw ConsistencyError("solve_radius: no sign change of H on [0, 1 - 1e-9] for " +
                               std::string(tag_name(eq.spec().tag)) + " " +
                               describe(eq.spec()));
    }

    int iter = 0;
    while (hi - lo > cfg.tol) {
        if (++iter > cfg.max_iter) {
            std::ostringstream msg;
            msg << "solve_radius: bracket width " << hi - lo << " after " << cfg.max_iter
                << " iterations";
            throw ConvergenceError(msg.str(), hi - lo);
        }
        const double mid = 0.5 * (lo + hi);
        const double v = eq(mid).value;
        if (v > 0.0) {
            hi = mid;
        } else if (v < 0.0) {
            lo = mid;
        } else {
            lo = hi = mid;
        }
    }

    // Newton polish, accepted only while it stays in the bracket and
    // reduces |H|.
    double x = 0.5 * (lo + hi);
    SeriesValue hx = eq(x);
    for (int step = 0; step < 3 && hx.value != 0.0; ++step) {
        const double xn = x - hx.value / eq.derivative(x);
        if (!(xn >= lo && xn <= hi)) break;
        const SeriesValue hn = eq(xn);
        if (!(std::abs(hn.value) < std::abs(hx.value))) break;
        x = xn;
        hx = hn;
        ++iter;
    }

    out.radius = x;
    out.residual = std::abs(hx.value);
    out.series_error = hx.error_bound;
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    out.iterations = iter;
    out.method = Method::BisectionNewton;
    return out;
}

std::optional<double> closed_form_radius(const ClassSpec& spec) {
    validate(spec);
    switch (spec.tag) {
        case ClassTag::GtBeta: {
            // Positive root of (1 - 2b) r^2 + (1 + b) r - b = 0 in the
            // rationalized form, which is exact at b = 0.
            const double b = spec.beta;
            return 2.0 * b / (1.0 + b + std::sqrt(1.0 + 6.0 * b - 7.0 * b * b));
        }
        case ClassTag::TbM: {
            // Positive root of M r^2 + 2 r + (M - 2) = 0.
            const double m = spec.m;
            return (2.0 - m) / (1.0 + std::sqrt(1.0 + 2.0 * m - m * m));
        }
        default: return std::nullopt;
    }
}

RadiusResult solve_radius(const ClassSpec& spec, const SolverConfig& cfg) {
    const BohrEquation eq(spec, cfg);
    if (const auto r = closed_form_radius(spec)) {
        const SeriesValue h = eq(*r);
        RadiusResult out;
        out.radius = *r;
        out.residual = std::abs(h.value);
        out.series_error = h.error_bound;
        out.bracket_lo = out.bracket_hi = *r;
        out.method = Method::ClosedForm;
        out.d_star = eq.distance().value;
        return out;
    }
    return solve_by_bisection(eq, cfg);
}

double jacobian_radius(double m) {
    if (!(m > 0.0 && m < 2.0)) throw DomainError("jacobian_radius: M must satisfy 0 < M < 2");
    return 0.5 * *closed_form_radius(ClassSpec::tb_m(m));
}

double jacobian_functional(double m, double r) {
    if (!(m > 0.0 && m < 2.0))
        throw DomainError("jacobian_functional: M must satisfy 0 < M < 2");
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("jacobian_functional: r outside [0, 1)");
    return 2.0 * m * r * r + 2.0 * r;
}

RadiusResult solve_jacobian_radius(double m) {
    RadiusResult out;
    out.radius = jacobian_radius(m);
    out.d_star = 1.0 - 0.5 * m;
    out.residual = std::abs(jacobian_functional(m, out.radius) - out.d_star);
    out.bracket_lo = out.bracket_hi = out.radius;
    out.method = Method::ClosedForm;
    return out;
}

}  // namespace bohr
