#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bohr/radius.hpp"

using namespace bohr;

namespace {

struct Expected {
    ClassSpec spec;
    double radius;
};

// 40-digit reference roots of B(r) = d*, rounded to double.
const Expected reference[] = {
    {ClassSpec::ph_alpha(0.0), 0.28519408763722219},
    {ClassSpec::ph_alpha(0.2), 0.36574280165048921},
    {ClassSpec::ph_alpha(0.3), 0.40782588650321214},
    {ClassSpec::ph_alpha(0.4), 0.45220130117056463},
    {ClassSpec::ph_alpha(0.5), 0.5},
    {ClassSpec::ph_alpha(0.6), 0.55287956426884597},
    {ClassSpec::ph_alpha(0.8), 0.68723319287000784},
    {ClassSpec::wh_alpha(0.0), 0.28519408763722219},
    {ClassSpec::wh_alpha(0.25), 0.3509993717837578},
    {ClassSpec::wh_alpha(0.5), 0.40569587176282461},
    {ClassSpec::wh_alpha(0.75), 0.4509617802737703},
    {ClassSpec::wh_alpha(1.0), 0.48888791970419893},
    {ClassSpec::gh_k_alpha(1, 1.0), 0.28519408763722219},
    {ClassSpec::gh_k_alpha(2, 1.0), 0.46557701777634225},
    {ClassSpec::gh_k_alpha(1, 0.5), 0.17836570338448233},
    {ClassSpec::gh_k_alpha(2, 0.5), 0.3347797725309516},
    {ClassSpec::gh_k_alpha(3, 2.0), 0.67524028284105505},
    {ClassSpec::gh_k_alpha(1, 4.0), 0.55053182826522857},
    {ClassSpec::gh_k_alpha(3, 0.5), 0.44426892025056923},
    {ClassSpec::gh_k_alpha(1, 0.1), 0.04577768416797571},
    {ClassSpec::ph_m(0.1), 0.82035280432963454},
    {ClassSpec::ph_m(0.25), 0.6601626878153928},
    {ClassSpec::ph_m(0.5), 0.47621121763755085},
    {ClassSpec::ph_m(0.75), 0.32877350529394441},
    {ClassSpec::ph_m(1.0), 0.18914061712770422},
    {ClassSpec::ph_m(1.2), 0.067327569515260724},
    {ClassSpec::ph_m(1.29), 0.0033460889328404683},
    {ClassSpec::gt_beta(0.25), 0.18614066163450716},
    {ClassSpec::gt_beta(0.45), 0.30397246486906384},
};

}  // namespace

TEST_CASE("radii match reference roots") {
    for (const Expected& e : reference) {
        CAPTURE(tag_name(e.spec.tag));
        CAPTURE(describe(e.spec));
        const RadiusResult res = solve_radius(e.spec);
        CHECK(std::abs(res.radius - e.radius) <= 1e-11);
        CHECK(res.residual <= 1e-12);
        CHECK(res.radius >= res.bracket_lo);
        CHECK(res.radius <= res.bracket_hi);
    }
}

TEST_CASE("bisection result carries its bracket") {
    const RadiusResult res = solve_radius(ClassSpec::ph_alpha(0.0));
    CHECK(res.method == Method::BisectionNewton);
    CHECK(res.bracket_hi - res.bracket_lo <= 1e-12);
    CHECK(res.iterations > 30);
    CHECK(res.d_star == doctest::Approx(2.0 * std::numbers::ln2 - 1.0));
    CHECK(method_name(res.method) == "BISECTION_NEWTON");
}

TEST_CASE("gt-beta at beta = 0 is exactly zero") {
    const RadiusResult cf = solve_radius(ClassSpec::gt_beta(0.0));
    CHECK(cf.radius == 0.0);
    CHECK(cf.method == Method::ClosedForm);
    const RadiusResult bis = solve_by_bisection(build_equation(ClassSpec::gt_beta(0.0)));
    CHECK(bis.radius == 0.0);
    CHECK(bis.method == Method::ClosedForm);
}

TEST_CASE("closed forms agree with bisection") {
    for (int i = 0; i <= 9; ++i) {
        const ClassSpec spec = ClassSpec::gt_beta(0.05 * i);
        const double bis = solve_by_bisection(build_equation(spec)).radius;
        CHECK(std::abs(*closed_form_radius(spec) - bis) <= 1e-10);
    }
    for (int i = 1; i <= 19; ++i) {
        const double m = 0.1 * i;
        const ClassSpec spec = ClassSpec::tb_m(m);
        const double r = *closed_form_radius(spec);
        CHECK(std::abs(m * r * r + 2.0 * r + (m - 2.0)) <= 1e-12);
        CHECK(std::abs(r - solve_by_bisection(build_equation(spec)).radius) <= 1e-10);
    }
    CHECK(std::abs(*closed_form_radius(ClassSpec::tb_m(1.0)) - (std::numbers::sqrt2 - 1.0)) <=
          1e-12);
    CHECK_FALSE(closed_form_radius(ClassSpec::ph_alpha(0.0)).has_value());
}

TEST_CASE("jacobian radius is half the tb-m radius") {
    for (int i = 1; i <= 19; ++i) {
        const double m = 0.1 * i;
        const double r = jacobian_radius(m);
        CHECK(r == *closed_form_radius(ClassSpec::tb_m(m)) / 2.0);
        CHECK(std::abs(4.0 * m * r * r + 4.0 * r + (m - 2.0)) <= 1e-12);
        CHECK(solve_jacobian_radius(m).residual <= 1e-15);
    }
    CHECK_THROWS_AS(jacobian_radius(0.0), DomainError);
    CHECK_THROWS_AS(jacobian_radius(2.0), DomainError);
    CHECK_THROWS_AS(jacobian_functional(1.0, 1.0), DomainError);
}

TEST_CASE("radius is monotone in the parameter") {
    double prev = 0.0;
    for (int i = 0; i <= 9; ++i) {
        const double r = solve_radius(ClassSpec::ph_alpha(0.1 * i)).radius;
        CHECK(r >= prev);
        prev = r;
    }
    prev = 1.0;
    for (int i = 1; i <= 12; ++i) {
        const double r = solve_radius(ClassSpec::ph_m(0.1 * i)).radius;
        CHECK(r <= prev);
        prev = r;
    }
    prev = 1.0;
    for (int i = 1; i <= 19; ++i) {
        const double r = solve_radius(ClassSpec::tb_m(0.1 * i)).radius;
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("H is increasing and changes sign once") {
    const BohrEquation eq = build_equation(ClassSpec::wh_alpha(0.5));
    double prev = eq(0.0).value;
    CHECK(prev < 0.0);
    for (int i = 1; i <= 100; ++i) {
        const double v = eq(i / 101.0).value;
        CHECK(v > prev);
        prev = v;
    }
    CHECK(eq.certainly_positive(bracket_upper));
    CHECK_FALSE(eq.certainly_positive(0.1));
}

TEST_CASE("solver errors") {
    SolverConfig cfg;
    cfg.max_iter = 5;
    CHECK_THROWS_AS(solve_radius(ClassSpec::ph_alpha(0.0), cfg), ConvergenceError);
    cfg = {};
    cfg.tol = 0.0;
    CHECK_THROWS_AS(solve_radius(ClassSpec::ph_alpha(0.0), cfg), DomainError);
    CHECK_THROWS_AS(solve_radius(ClassSpec::gt_beta(0.5)), ValidationError);
    CHECK_THROWS_AS(solve_radius(ClassSpec::ph_m(1.3)), ValidationError);
}

TEST_CASE("looser tolerance still brackets the reference root") {
    SolverConfig cfg;
    cfg.tol = 1e-6;
    cfg.series_tol = 1e-7;
    const RadiusResult res = solve_radius(ClassSpec::wh_alpha(1.0), cfg);
    CHECK(std::abs(res.radius - 0.48888791970419893) <= 1e-6);
    CHECK(res.iterations < 40);
}

TEST_CASE("documented jacobian values") {
    CHECK(jacobian_radius(1.0) == doctest::Approx((std::numbers::sqrt2 - 1.0) / 2.0).epsilon(1e-15));
    CHECK(jacobian_functional(1.0, 0.0) == 0.0);
    CHECK(jacobian_functional(1.0, jacobian_radius(1.0)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(jacobian_functional(0.5, 0.1) == doctest::Approx(0.21).epsilon(1e-15));
    CHECK(jacobian_radius(std::nextafter(2.0, 0.0)) < 1e-8);
    CHECK(jacobian_radius(std::nextafter(2.0, 0.0)) > 0.0);
}

TEST_CASE("ph-m M=0.5 solves 2r + (1-r) ln(1-r) = 2 - ln 4") {
    const double r = solve_radius(ClassSpec::ph_m(0.5)).radius;
    CHECK(std::abs(2.0 * r + (1.0 - r) * std::log1p(-r) - (2.0 - std::log(4.0))) <= 1e-12);
}
