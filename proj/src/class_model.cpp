#include "bohr/class_model.hpp"

#include <cmath>
#include <limits>
#include <algorithm>
#include <numbers>
#include <sstream>

namespace bohr {

namespace {

void require_open_unit(double r, const char* who) {
    if (!(r >= 0.0 && r < 1.0)) {
        std::ostringstream msg;
        msg << who << ": r = " << r << " outside [0, 1)";
        throw DomainError(msg.str());
    }
}

[[noreturn]] void fail(const ClassSpec& spec, const std::string& bound) {
    throw ValidationError(std::string(tag_name(spec.tag)) + ": " + bound + " (got " +
                          describe(spec) + ")");
}

// Sum_{n >= start} n c_n r^(n-1) until terms stop mattering.
double differentiated_series(const CoefficientRule& rule, double r) {
    if (r == 0.0) return rule.start == 1 ? rule(1) : 0.0;
    double sum = 0.0;
    for (long n = rule.start; n < rule.start + 100'000'000L; ++n) {
        const double x = static_cast<double>(n);
        const double term = x * rule(n) * std::pow(r, x - 1.0);
        sum += term;
        // Terms are eventually decreasing geometrically once n r < n - 1.
        if (x * r < x - 1.0 && term <= 1e-17 * sum) break;
    }
    return sum;
}

}  // namespace

double ph_m_upper_bound() { return 1.0 / (2.0 * (2.0 * std::numbers::ln2 - 1.0)); }

std::string_view tag_name(ClassTag tag) {
    switch (tag) {
        case ClassTag::PhAlpha: return "ph-alpha";
        case ClassTag::GtBeta: return "gt-beta";
        case ClassTag::WhAlpha: return "wh-alpha";
        case ClassTag::GhKAlpha: return "gh-k-alpha";
        case ClassTag::TbM: return "tb-m";
        case ClassTag::PhM: return "ph-m";
    }
    return "unknown";
}

std::optional<ClassTag> parse_tag(std::string_view name) {
    for (ClassTag t : {ClassTag::PhAlpha, ClassTag::GtBeta, ClassTag::WhAlpha,
                       ClassTag::GhKAlpha, ClassTag::TbM, ClassTag::PhM})
        if (tag_name(t) == name) return t;
    return std::nullopt;
}

std::string describe(const ClassSpec& spec) {
    std::ostringstream out;
    out.precision(12);
    switch (spec.tag) {
        case ClassTag::PhAlpha:
        case ClassTag::WhAlpha: out << "alpha=" << spec.alpha; break;
        case ClassTag::GtBeta: out << "beta=" << spec.beta; break;
        case ClassTag::GhKAlpha: out << "k=" << spec.k << ", alpha=" << spec.alpha; break;
        case ClassTag::TbM:
        case ClassTag::PhM: out << "M=" << spec.m; break;
    }
    return out.str();
}

void validate(const ClassSpec& spec) {
    switch (spec.tag) {
        case ClassTag::PhAlpha:
            if (!(spec.alpha >= 0.0)) fail(spec, "alpha must be >= 0");
            if (!(spec.alpha < 1.0)) fail(spec, "alpha must be < 1");
            return;
        case ClassTag::GtBeta:
            if (!(spec.beta >= 0.0)) fail(spec, "beta must be >= 0");
            if (!(spec.beta < 0.5)) fail(spec, "beta must be < 1/2");
            return;
        case ClassTag::WhAlpha:
            if (!(spec.alpha >= 0.0)) fail(spec, "alpha must be >= 0");
            if (!(spec.alpha <= 1.0)) fail(spec, "alpha must be <= 1");
            return;
        case ClassTag::GhKAlpha:
            if (spec.k < 1) fail(spec, "k must be >= 1");
            if (!(spec.alpha > 0.0)) fail(spec, "alpha must be > 0");
            if (!std::isfinite(spec.alpha)) fail(spec, "alpha must be finite");
            return;
        case ClassTag::TbM:
            if (!(spec.m > 0.0)) fail(spec, "M must be > 0");
            if (!(spec.m < 2.0)) fail(spec, "M must be < 2");
            return;
        case ClassTag::PhM:
            if (!(spec.m > 0.0)) fail(spec, "M must be > 0");
            if (!(spec.m < ph_m_upper_bound()))
                fail(spec, "M must be < 1/(2(ln 4 - 1)) = 1.29434972478");
            return;
    }
    throw ValidationError("unknown class tag");
}

long start_index(const ClassSpec& spec) {
    return spec.tag == ClassTag::GhKAlpha ? static_cast<long>(spec.k) + 1 : 2;
}

double coefficient_bound(const ClassSpec& spec, long n) {
    if (n < start_index(spec)) {
        std::ostringstream msg;
        msg << "coefficient_bound: n = " << n << " below start index " << start_index(spec);
        throw DomainError(msg.str());
    }
    const double x = static_cast<double>(n);
    switch (spec.tag) {
        case ClassTag::PhAlpha: return 2.0 * (1.0 - spec.alpha) / x;
        case ClassTag::GtBeta: return 2.0 * (1.0 - spec.beta);
        case ClassTag::WhAlpha: return 2.0 / (x * (1.0 + spec.alpha * (x - 1.0)));
        case ClassTag::GhKAlpha: return 2.0 / (1.0 + (x - 1.0) * spec.alpha);
        case ClassTag::TbM: return n == 2 ? 0.5 * spec.m : 0.0;
        case ClassTag::PhM: return 2.0 * spec.m / (x * (x - 1.0));
    }
    return 0.0;
}

CoefficientRule bound_rule(const ClassSpec& spec) {
    const long start = start_index(spec);
    switch (spec.tag) {
        case ClassTag::PhAlpha: return rules::harmonic(2.0 * (1.0 - spec.alpha), start);
        case ClassTag::WhAlpha: return rules::second_order(spec.alpha, start);
        case ClassTag::GhKAlpha: return rules::shifted_linear(spec.alpha, start);
        case ClassTag::PhM: return rules::pair_product(2.0 * spec.m, start);
        case ClassTag::GtBeta:
        case ClassTag::TbM: break;
    }
    return {[spec](long n) { return coefficient_bound(spec, n); }, start};
}

SeriesValue distance_bound(const ClassSpec& spec, double tol) {
    validate(spec);
    constexpr double ulp = std::numeric_limits<double>::epsilon();
    const double ln2 = std::numbers::ln2;
    switch (spec.tag) {
        case ClassTag::PhAlpha:
            return {1.0 + 2.0 * (1.0 - spec.alpha) * (ln2 - 1.0), 4.0 * ulp};
        case ClassTag::GtBeta: return {spec.beta, 0.0};
        case ClassTag::WhAlpha: {
            if (spec.alpha == 0.0) return {2.0 * ln2 - 1.0, 4.0 * ulp};
            if (spec.alpha == 1.0) return {std::numbers::pi * std::numbers::pi / 6.0 - 1.0, 4.0 * ulp};
            const SeriesValue s = alt_constant(bound_rule(spec), tol);
            return {1.0 + s.value, s.error_bound};
        }
        case ClassTag::GhKAlpha: {
            const SeriesValue s = g_alt_constant(spec.k, spec.alpha, 0.5 * tol);
            return {1.0 + 2.0 * s.value, 2.0 * s.error_bound};
        }
        case ClassTag::TbM: return {1.0 - 0.5 * spec.m, 0.0};
        case ClassTag::PhM:
            return {1.0 + 2.0 * spec.m * (1.0 - 2.0 * ln2), 4.0 * ulp};
    }
    return {};
}

SeriesValue bohr_sum(const ClassSpec& spec, double r, double tol) {
    require_open_unit(r, "bohr_sum");
    switch (spec.tag) {
        case ClassTag::PhAlpha:
            return {r + 2.0 * (1.0 - spec.alpha) * log_tail(r), 0.0};
        case ClassTag::GtBeta:
            return {r + 2.0 * (1.0 - spec.beta) * r * r / (1.0 - r), 0.0};
        case ClassTag::WhAlpha:
            if (spec.alpha == 0.0) return {r + 2.0 * log_tail(r), 0.0};
            [[fallthrough]];
        case ClassTag::GhKAlpha: {
            const SeriesValue s = sum_power_series(bound_rule(spec), r, tol);
            return {r + s.value, s.error_bound};
        }
        case ClassTag::TbM: return {r + 0.5 * spec.m * r * r, 0.0};
        case ClassTag::PhM: return {r + 2.0 * spec.m * nn1_tail(r), 0.0};
    }
    return {};
}

double bohr_sum_derivative(const ClassSpec& spec, double r) {
    require_open_unit(r, "bohr_sum_derivative");
    switch (spec.tag) {
        case ClassTag::PhAlpha: return 1.0 + 2.0 * (1.0 - spec.alpha) * r / (1.0 - r);
        case ClassTag::GtBeta: {
            const double q = 1.0 - r;
            return 1.0 + 2.0 * (1.0 - spec.beta) * r * (2.0 - r) / (q * q);
        }
        case ClassTag::WhAlpha:
        case ClassTag::GhKAlpha: return 1.0 + differentiated_series(bound_rule(spec), r);
        case ClassTag::TbM: return 1.0 + spec.m * r;
        case ClassTag::PhM: return 1.0 - 2.0 * spec.m * std::log1p(-r);
    }
    return 1.0;
}

double bohr_sum_lower_bound(const ClassSpec& spec, double r, double target) {
    require_open_unit(r, "bohr_sum_lower_bound");
    if (spec.tag != ClassTag::WhAlpha && spec.tag != ClassTag::GhKAlpha)
        return bohr_sum(spec, r).value;
    const CoefficientRule rule = bound_rule(spec);
    double sum = r;
    for (long n = rule.start; sum <= target && n < rule.start + 100'000'000L; ++n) {
        const double term = rule(n) * std::pow(r, static_cast<double>(n));
        if (term == 0.0) break;
        sum += term;
    }
    return sum;
}

GrowthEnvelope growth_envelope(const ClassSpec& spec, double r, double tol) {
    require_open_unit(r, "growth_envelope");
    switch (spec.tag) {
        case ClassTag::PhAlpha: {
            const double s = 2.0 * (1.0 - spec.alpha);
            return {r + s * alt_log_tail(r), r + s * log_tail(r), 0.0};
        }
        case ClassTag::GtBeta: {
            const double b = spec.beta;
            return {b * r + (1.0 - b) * (1.0 - r) / (1.0 + r) * r,
                    b * r + (1.0 - b) * (1.0 + r) / (1.0 - r) * r, 0.0};
        }
        case ClassTag::WhAlpha: {
            if (spec.alpha == 0.0) return {r + 2.0 * alt_log_tail(r), r + 2.0 * log_tail(r), 0.0};
            const CoefficientRule rule = bound_rule(spec);
            const SeriesValue lo = sum_alternating_power_series(rule, r, 0.5 * tol);
            const SeriesValue hi = sum_power_series(rule, r, 0.5 * tol);
            return {r + lo.value, r + hi.value, std::max(lo.error_bound, hi.error_bound)};
        }
        case ClassTag::GhKAlpha: {
            // Only the powers z^(nk+1) appear: r Sum_{n>=1} (+-1)^n 2 rho^n / (1 + n k alpha)
            // with rho = r^k.
            const double rho = std::pow(r, spec.k);
            const CoefficientRule rule =
                rules::reciprocal_linear(2.0, static_cast<double>(spec.k) * spec.alpha);
            const SeriesValue lo = sum_alternating_power_series(rule, rho, 0.5 * tol);
            const SeriesValue hi = sum_power_series(rule, rho, 0.5 * tol);
            return {r - r * lo.value, r + r * hi.value,
                    r * std::max(lo.error_bound, hi.error_bound)};
        }
        case ClassTag::TbM: {
            const double q = 0.5 * spec.m * r * r;
            return {r - q, r + q, 0.0};
        }
        case ClassTag::PhM: {
            const double s = 2.0 * spec.m;
            return {r + s * alt_nn1_tail(r), r + s * nn1_tail(r), 0.0};
        }
    }
    return {};
}

double lower_touch_angle(const ClassSpec& spec) {
    if (spec.tag == ClassTag::GhKAlpha) return std::numbers::pi / spec.k;
    return std::numbers::pi;
}

double ExtremalFunction::truncation_bound(double r) const {
    if (tail_coefficient == 0.0 || r == 0.0) return 0.0;
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return tail_coefficient * std::pow(r, static_cast<double>(truncation + 1)) / (1.0 - r);
}

ExtremalFunction extremal_coefficients(const ClassSpec& spec, long truncation) {
    const long start = start_index(spec);
    if (truncation < start) {
        std::ostringstream msg;
        msg << "extremal_coefficients: truncation " << truncation << " below start index "
            << start;
        throw DomainError(msg.str());
    }
    ExtremalFunction f;
    f.truncation = truncation;
    f.a.assign(static_cast<std::size_t>(truncation) + 1, 0.0);
    f.b.assign(static_cast<std::size_t>(truncation) + 1, 0.0);
    f.a[1] = 1.0;
    for (long n = start; n <= truncation; ++n) {
        if (spec.tag == ClassTag::GhKAlpha && (n - 1) % spec.k != 0) continue;
        f.a[static_cast<std::size_t>(n)] = coefficient_bound(spec, n);
    }
    f.tail_coefficient = spec.tag == ClassTag::TbM ? 0.0 : coefficient_bound(spec, truncation + 1);
    return f;
}

}  // namespace bohr
