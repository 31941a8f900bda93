#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

/// The six harmonic-mapping families.
enum class ClassTag {
    PhAlpha,   ///< Re(h' - alpha) > |g'|, 0 <= alpha < 1
    GtBeta,    ///< Re(h/z) - beta > |g/z|, 0 <= beta < 1/2
    WhAlpha,   ///< Re(h' + alpha z h'') > |g' + alpha z g''|, 0 <= alpha <= 1
    GhKAlpha,  ///< k-fold normalized, Re((1-alpha) h/z + alpha h') > |...|
    TbM,       ///< Sum n(n-1)(|a_n| + |b_n|) <= M, 0 < M < 2
    PhM,       ///< Re(z h'') > -M + |z g''|, 0 < M < 1/(2(ln 4 - 1))
};

/// Tagged parameter set. Only the fields relevant to the tag are read.
struct ClassSpec {
    ClassTag tag = ClassTag::PhAlpha;
    double alpha = 0.0;
    double beta = 0.0;
    double m = 0.0;
    int k = 1;

    static ClassSpec ph_alpha(double alpha) { return {ClassTag::PhAlpha, alpha, 0.0, 0.0, 1}; }
    static ClassSpec gt_beta(double beta) { return {ClassTag::GtBeta, 0.0, beta, 0.0, 1}; }
    static ClassSpec wh_alpha(double alpha) { return {ClassTag::WhAlpha, alpha, 0.0, 0.0, 1}; }
    static ClassSpec gh_k_alpha(int k, double alpha) { return {ClassTag::GhKAlpha, alpha, 0.0, 0.0, k}; }
    static ClassSpec tb_m(double m) { return {ClassTag::TbM, 0.0, 0.0, m, 1}; }
    static ClassSpec ph_m(double m) { return {ClassTag::PhM, 0.0, 0.0, m, 1}; }
};

/// Thrown by validate(); the message names the violated bound.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 1 / (2 (ln 4 - 1)), the upper end of the P_H(M) parameter range.
double ph_m_upper_bound();

std::string_view tag_name(ClassTag tag);
std::optional<ClassTag> parse_tag(std::string_view name);

/// Human-readable parameter list, e.g. "k=2, alpha=0.5".
std::string describe(const ClassSpec& spec);

void validate(const ClassSpec& spec);

/// First index n at which coefficients may be nonzero: k + 1 for
/// GhKAlpha, 2 otherwise.
long start_index(const ClassSpec& spec);

/// Sharp bound c_n on |a_n| + |b_n|, i.e. the weight of r^n in the Bohr sum.
/// For TbM the worst case puts the whole budget on n = 2, so c_2 = M/2 and
/// c_n = 0 beyond.
double coefficient_bound(const ClassSpec& spec, long n);

/// coefficient_bound as a rule for the series engine. Not meaningful for
/// TbM, whose majorant is a polynomial.
CoefficientRule bound_rule(const ClassSpec& spec);

/// Lower bound d* for the distance from f(0) to the boundary of f(D); the
/// class extremal attains it.
SeriesValue distance_bound(const ClassSpec& spec, double tol = default_series_tol);

/// r + Sum_{n >= start} c_n r^n.
SeriesValue bohr_sum(const ClassSpec& spec, double r, double tol = default_series_tol);

/// d/dr of bohr_sum. Closed form where one exists, otherwise the
/// term-wise differentiated series (value only, used for Newton steps).
double bohr_sum_derivative(const ClassSpec& spec, double r);

/// A partial sum of bohr_sum, which is a certified lower bound since all
/// terms are positive. Stops as soon as it exceeds `target`.
double bohr_sum_lower_bound(const ClassSpec& spec, double r, double target);

struct GrowthEnvelope {
    double lower = 0.0;
    double upper = 0.0;
    double error_bound = 0.0;
};

/// Sharp bounds on |f(z)| for |z| = r.
GrowthEnvelope growth_envelope(const ClassSpec& spec, double r,
                               double tol = default_series_tol);

/// Argument at which the lower growth bound is attained by the extremal:
/// pi for every class except GhKAlpha, where it is pi / k.
double lower_touch_angle(const ClassSpec& spec);

/// Truncated coefficient table of a class extremal. Arrays are indexed by
/// n, so a[1] = 1 and a[0] = b[0] = b[1] = 0.
struct ExtremalFunction {
    long truncation = 0;
    std::vector<double> a;
    std::vector<double> b;
    /// Bound on every coefficient beyond the truncation (0 when the
    /// extremal is a polynomial of degree <= truncation).
    double tail_coefficient = 0.0;

    /// Sum_{n > N} tail_coefficient r^n.
    double truncation_bound(double r) const;
};

ExtremalFunction extremal_coefficients(const ClassSpec& spec, long truncation);

}  // namespace bohr
