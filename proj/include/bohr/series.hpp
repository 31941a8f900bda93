#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace bohr {

/// Numeric value with an absolute error bound. A bound of zero means the
/// value came from an elementary closed form and carries only rounding.
struct SeriesValue {
    double value = 0.0;
    double error_bound = 0.0;
};

/// Argument outside the domain of an operation (r >= 1, alpha <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A coefficient sequence that is not positive and decreasing where the
/// alternating-sum machinery needs it to be.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested tolerance could not be reached. `achieved` is the best
/// error bound the routine managed before giving up.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// n -> c_n for n >= start. Every rule built in this library is positive,
/// nonincreasing and a Hausdorff moment sequence (c_n = int_0^1 x^n dmu),
/// which is what both tail bounds below rely on.
struct CoefficientRule {
    std::function<double(long)> coefficient;
    long start = 1;

    double operator()(long n) const { return coefficient(n); }
};

namespace rules {

/// scale / n
CoefficientRule harmonic(double scale, long start = 2);
/// scale / n^2
CoefficientRule inverse_square(double scale, long start = 2);
/// scale / (n (n - 1))
CoefficientRule pair_product(double scale, long start = 2);
/// 2 / (alpha n^2 + n (1 - alpha))
CoefficientRule second_order(double alpha, long start = 2);
/// 2 / (1 + (n - 1) alpha)
CoefficientRule shifted_linear(double alpha, long start);
/// scale / (1 + n c), n >= 1
CoefficientRule reciprocal_linear(double scale, double c);

}  // namespace rules

/// Largest r accepted by the generic summation routines.
inline constexpr double max_generic_radius = 1.0 - 1e-9;

/// Default absolute tolerance for series values.
inline constexpr double default_series_tol = 1e-12;

/// Sum_{n >= start} c_n r^n. Terms are added until the geometric tail
/// c_{N+1} r^{N+1} / (1 - r) drops below the tolerance; the returned bound
/// covers that tail plus accumulated rounding.
SeriesValue sum_power_series(const CoefficientRule& rule, double r,
                             double tol = default_series_tol,
                             long max_terms = 100'000'000);

/// Sum_{n >= start} (-1)^(n-1) c_n r^n, for 0 <= r <= 1. At r = 1 this is
/// the alternating constant handled by alt_constant.
SeriesValue sum_alternating_power_series(const CoefficientRule& rule, double r,
                                         double tol = default_series_tol);

/// Sum_{n >= start} (-1)^(n-1) c_n. The sign convention follows the index
/// n, not the offset from start, so start = 2 begins with -c_2.
///
/// Evaluated with the Cohen-Rodriguez Villegas-Zagier acceleration: for a
/// moment sequence the error after m weighted terms is at most
/// 2 |c_start| / (3 + sqrt 8)^m, so 1/n-type constants reach 1e-13 in
/// about twenty term evaluations. Throws PreconditionError if the sampled
/// terms are not positive and strictly decreasing.
SeriesValue alt_constant(const CoefficientRule& rule,
                         double tol = default_series_tol);

/// Sum_{n >= 1} (-1)^n / (1 + n k alpha).
SeriesValue g_alt_constant(int k, double alpha,
                           double tol = default_series_tol);

/// Sum_{n >= 2} r^n / n = -ln(1 - r) - r.
double log_tail(double r);

/// Sum_{n >= 2} (-1)^(n-1) r^n / n = ln(1 + r) - r, for 0 <= r <= 1.
double alt_log_tail(double r);

/// Sum_{n >= 2} r^n / (n (n - 1)) = r + (1 - r) ln(1 - r), for 0 <= r <= 1.
double nn1_tail(double r);

/// Sum_{n >= 2} (-1)^(n-1) r^n / (n (n - 1)) = r - (1 + r) ln(1 + r).
double alt_nn1_tail(double r);

}  // namespace bohr
