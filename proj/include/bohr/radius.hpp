#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "bohr/class_model.hpp"
#include "bohr/series.hpp"

namespace bohr {

struct SolverConfig {
    double tol = 1e-12;         ///< final bracket width
    double series_tol = 1e-13;  ///< absolute tolerance for every series value
    int max_iter = 200;
};

enum class Method { ClosedForm, BisectionNewton };

std::string_view method_name(Method m);

struct RadiusResult {
    double radius = 0.0;
    double residual = 0.0;  ///< |H(radius)|
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    Method method = Method::ClosedForm;
    double d_star = 0.0;
    /// Series error carried by H at the radius (distance constant plus
    /// Bohr sum). Since H' >= 1 the radius is uncertain by at most
    /// residual + series_error beyond the bracket.
    double series_error = 0.0;
};

/// H admits no sign change on [0, 1 - 1e-9] for a spec that passed
/// validation. Indicates a modelling bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// H(r) = bohr_sum(r) - d*, strictly increasing on [0, 1).
class BohrEquation {
public:
    BohrEquation(const ClassSpec& spec, const SolverConfig& cfg);

    const ClassSpec& spec() const { return spec_; }
    const SeriesValue& distance() const { return d_star_; }

    /// H(r) with its error bound (series error of both sides).
    SeriesValue operator()(double r) const;

    /// H'(r); closed form for PhAlpha, GtBeta, TbM and PhM, the
    /// differentiated series otherwise.
    double derivative(double r) const;

    /// True when H(r) > 0 is certified. Uses partial sums, so it also works
    /// next to r = 1 where full evaluation of slowly decaying series is
    /// impractical.
    bool certainly_positive(double r) const;

private:
    ClassSpec spec_;
    SolverConfig cfg_;
    SeriesValue d_star_;
};

BohrEquation build_equation(const ClassSpec& spec, const SolverConfig& cfg = {});

/// Upper end of the initial bracket. The Bohr sums with c_n ~ 1/n diverge
/// at r = 1, so the root is always below this.
inline constexpr double bracket_upper = 1.0 - 1e-9;

/// Root of H in (0, 1) by bisection on [0, 1 - 1e-9] followed by Newton
/// polishing inside the final bracket. Returns radius 0 when H(0) >= 0.
RadiusResult solve_by_bisection(const BohrEquation& eq, const SolverConfig& cfg = {});

/// The radius for a class, using the closed form when there is one.
RadiusResult solve_radius(const ClassSpec& spec, const SolverConfig& cfg = {});

/// Closed-form radius for GtBeta and TbM, nullopt for the series classes.
std::optional<double> closed_form_radius(const ClassSpec& spec);

/// Radius for |f| + sqrt|J_f| |z| + Sum (|a_n|+|b_n|) |z|^n in the TbM
/// class: the root of 4 M r^2 + 4 r + (M - 2) = 0, exactly half the TbM
/// radius.
double jacobian_radius(double m);

/// The majorant 2 M r^2 + 2 r of the Jacobian functional.
double jacobian_functional(double m, double r);

/// jacobian_radius packaged as a result; d_star is 1 - M/2.
RadiusResult solve_jacobian_radius(double m);

}  // namespace bohr
