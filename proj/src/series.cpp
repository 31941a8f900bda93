#include "bohr/series.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>
#include <algorithm>

namespace bohr {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// Below this radius the closed forms lose relative accuracy to cancellation
// and a short direct series is both faster and exact to rounding.
constexpr double small_radius = 0.0625;

// Convergence ratio of the alternating-series acceleration.
const double cvz_rate = 3.0 + std::sqrt(8.0);

void require_radius(double r, double hi, bool hi_inclusive, const char* who) {
    const bool ok = r >= 0.0 && (hi_inclusive ? r <= hi : r < hi);
    if (!ok) {
        std::ostringstream msg;
        msg << who << ": r = " << r << " outside [0, " << hi
            << (hi_inclusive ? "]" : ")");
        throw DomainError(msg.str());
    }
}

void require_tolerance(double tol, const char* who) {
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw DomainError(std::string(who) + ": tolerance must be positive");
}

// Sum_{n >= 2} sign^n w(n) r^n for small r, to full relative precision.
template <class Weight>
double short_series(double r, double sign, Weight w) {
    double power = r;
    double sum = 0.0;
    for (long n = 2; n < 200; ++n) {
        power *= sign * r;
        const double term = w(n) * power;
        sum += term;
        if (std::abs(term) <= eps * 0.25 * std::abs(sum)) break;
    }
    return sum;
}

// Sum_{j >= 0} (-1)^j a_j using m weighted terms (Cohen, Rodriguez Villegas,
// Zagier, Algorithm 1).
template <class Terms>
double accelerated_alternating(const Terms& a, int m) {
    double d = std::pow(cvz_rate, m);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    double s = 0.0;
    for (int k = 0; k < m; ++k) {
        c = b - c;
        s += c * a[k];
        b = (static_cast<double>(k) + m) * (static_cast<double>(k) - m) * b /
            ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

// Sum_{j >= 0} (-1)^j term(j) with an error bound, for positive strictly
// decreasing terms (trailing zeros from underflow are allowed).
template <class Term>
SeriesValue alternating_sum(Term term, double tol, const char* who) {
    require_tolerance(tol, who);
    const double a0 = term(0);
    if (!std::isfinite(a0) || a0 < 0.0)
        throw PreconditionError(std::string(who) + ": first term is not a finite positive number");
    if (a0 == 0.0) return {0.0, 0.0};

    // Smallest m with 2 a0 / rate^m <= tol / 4, plus a few guard terms for
    // the cross-check below.
    int m = static_cast<int>(std::ceil(std::log(8.0 * a0 / tol) / std::log(cvz_rate)));
    m = std::max(m, 4);
    constexpr int guard = 6;
    constexpr int max_terms = 100'000;
    if (m + guard > max_terms)
        throw ConvergenceError(std::string(who) + ": tolerance needs too many terms",
                               2.0 * a0 / std::pow(cvz_rate, max_terms));

    std::vector<double> a(static_cast<std::size_t>(m + guard));
    for (std::size_t j = 0; j < a.size(); ++j) {
        a[j] = term(static_cast<long>(j));
        if (j > 0 && !(a[j] < a[j - 1] || a[j] == 0.0)) {
            std::ostringstream msg;
            msg << who << ": terms are not strictly decreasing at offset " << j
                << " (" << a[j - 1] << " -> " << a[j] << ")";
            throw PreconditionError(msg.str());
        }
    }

    const int m_fine = m + guard;
    const double coarse = accelerated_alternating(a, m);
    const double fine = accelerated_alternating(a, m_fine);
    const double theory = 2.0 * a0 / std::pow(cvz_rate, m_fine);
    const double rounding = 4.0 * m_fine * eps * a0;
    const double bound = theory + rounding + std::abs(fine - coarse);
    if (bound > tol) {
        std::ostringstream msg;
        msg << who << ": achieved error bound " << bound << " exceeds tolerance " << tol;
        throw ConvergenceError(msg.str(), bound);
    }
    return {fine, bound};
}

}  // namespace

namespace rules {

CoefficientRule harmonic(double scale, long start) {
    return {[scale](long n) { return scale / static_cast<double>(n); }, start};
}

CoefficientRule inverse_square(double scale, long start) {
    return {[scale](long n) {
                const double x = static_cast<double>(n);
                return scale / (x * x);
            },
            start};
}

CoefficientRule pair_product(double scale, long start) {
    return {[scale](long n) {
                const double x = static_cast<double>(n);
                return scale / (x * (x - 1.0));
            },
            start};
}

CoefficientRule second_order(double alpha, long start) {
    // alpha n^2 + n (1 - alpha) written as n (1 + alpha (n - 1)) so that
    // alpha = 1 and alpha = 0 are both exact.
    return {[alpha](long n) {
                const double x = static_cast<double>(n);
                return 2.0 / (x * (1.0 + alpha * (x - 1.0)));
            },
            start};
}

CoefficientRule shifted_linear(double alpha, long start) {
    return {[alpha](long n) { return 2.0 / (1.0 + static_cast<double>(n - 1) * alpha); },
            start};
}

CoefficientRule reciprocal_linear(double scale, double c) {
    return {[scale, c](long n) { return scale / (1.0 + static_cast<double>(n) * c); }, 1};
}

}  // namespace rules

SeriesValue sum_power_series(const CoefficientRule& rule, double r, double tol,
                             long max_terms) {
    require_radius(r, max_generic_radius, true, "sum_power_series");
    require_tolerance(tol, "sum_power_series");
    if (r == 0.0) return {0.0, 0.0};

    const double one_minus_r = 1.0 - r;
    long n = rule.start;
    double term = rule(n) * std::pow(r, static_cast<double>(n));
    double sum = 0.0;
    double carry = 0.0;
    double magnitude = 0.0;
    double tail = 0.0;
    for (long count = 1;; ++count) {
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        magnitude += std::abs(term);

        const double next = rule(n + 1) * std::pow(r, static_cast<double>(n + 1));
        tail = next / one_minus_r;
        if (tail <= 0.5 * tol) break;
        if (count >= max_terms) {
            std::ostringstream msg;
            msg << "sum_power_series: tail bound " << tail << " after " << count
                << " terms at r = " << r;
            throw ConvergenceError(msg.str(), tail);
        }
        term = next;
        ++n;
    }
    // Each term carries a few ulps from pow and the product; compensated
    // summation adds about two more relative to the total.
    const double rounding = eps * (4.0 * magnitude + 2.0 * std::abs(sum));
    const double bound = tail + rounding;
    if (bound > tol) {
        std::ostringstream msg;
        msg << "sum_power_series: rounding floor " << bound << " exceeds tolerance " << tol;
        throw ConvergenceError(msg.str(), bound);
    }
    return {sum, bound};
}

SeriesValue sum_alternating_power_series(const CoefficientRule& rule, double r,
                                         double tol) {
    require_radius(r, 1.0, true, "sum_alternating_power_series");
    if (r == 0.0) return {0.0, 0.0};
    const long start = rule.start;
    auto term = [&](long j) {
        const long n = start + j;
        return rule(n) * std::pow(r, static_cast<double>(n));
    };
    SeriesValue s = alternating_sum(term, tol, "sum_alternating_power_series");
    if ((start - 1) % 2 != 0) s.value = -s.value;
    return s;
}

SeriesValue alt_constant(const CoefficientRule& rule, double tol) {
    const long start = rule.start;
    SeriesValue s = alternating_sum([&](long j) { return rule(start + j); }, tol,
                                    "alt_constant");
    if ((start - 1) % 2 != 0) s.value = -s.value;
    return s;
}

SeriesValue g_alt_constant(int k, double alpha, double tol) {
    if (k < 1) throw DomainError("g_alt_constant: k must be >= 1");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("g_alt_constant: alpha must be a finite positive number");
    const double c = static_cast<double>(k) * alpha;
    SeriesValue s = alt_constant(rules::reciprocal_linear(1.0, c), tol);
    s.value = -s.value;
    return s;
}

double log_tail(double r) {
    require_radius(r, 1.0, false, "log_tail");
    if (r < small_radius)
        return short_series(r, 1.0, [](long n) { return 1.0 / static_cast<double>(n); });
    return -std::log1p(-r) - r;
}

double alt_log_tail(double r) {
    require_radius(r, 1.0, true, "alt_log_tail");
    if (r < small_radius)
        return short_series(r, -1.0, [](long n) { return 1.0 / static_cast<double>(n); });
    return std::log1p(r) - r;
}

double nn1_tail(double r) {
    require_radius(r, 1.0, true, "nn1_tail");
    if (r == 1.0) return 1.0;
    if (r < small_radius)
        return short_series(r, 1.0, [](long n) {
            const double x = static_cast<double>(n);
            return 1.0 / (x * (x - 1.0));
        });
    return r + (1.0 - r) * std::log1p(-r);
}

double alt_nn1_tail(double r) {
    require_radius(r, 1.0, true, "alt_nn1_tail");
    if (r < small_radius)
        return short_series(r, -1.0, [](long n) {
            const double x = static_cast<double>(n);
            return 1.0 / (x * (x - 1.0));
        });
    return r - (1.0 + r) * std::log1p(r);
}

}  // namespace bohr
