#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "bohr/series.hpp"

using namespace bohr;

namespace {

// -int_0^1 t^c / (1 + t^c) dt, which equals Sum_{n>=1} (-1)^n / (1 + n c).
double g_alt_integral(double c) {
    auto f = [c](double t) { return -std::pow(t, c) / (1.0 + std::pow(t, c)); };
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(f, 0.0, 1.0);
}

}  // namespace

TEST_CASE("closed-form tails") {
    CHECK(log_tail(0.285194) == doctest::Approx(0.050550101775741704).epsilon(1e-14));
    CHECK(alt_log_tail(0.5) == doctest::Approx(-0.094534891891835618).epsilon(1e-14));
    CHECK(2.0 * nn1_tail(0.5) == doctest::Approx(0.30685281944005469).epsilon(1e-14));
    CHECK(alt_nn1_tail(1.0) == doctest::Approx(1.0 - 2.0 * std::numbers::ln2).epsilon(1e-14));
    CHECK(log_tail(0.0) == 0.0);
    // relative accuracy survives tiny r
    CHECK(log_tail(1e-8) == doctest::Approx(0.5e-16).epsilon(1e-7));
    CHECK(nn1_tail(1.0) == 1.0);
}

TEST_CASE("power series against closed forms") {
    const SeriesValue s = sum_power_series(rules::harmonic(2.0), 0.5, 1e-14);
    CHECK(std::abs(s.value - 0.38629436111989062) <= 1e-14);
    CHECK(s.error_bound <= 1e-14);

    for (double r : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
        CAPTURE(r);
        const SeriesValue h = sum_power_series(rules::harmonic(1.0), r, 1e-13);
        CHECK(std::abs(h.value - log_tail(r)) <= 1e-13);
        const SeriesValue p = sum_power_series(rules::pair_product(1.0), r, 1e-13);
        CHECK(std::abs(p.value - nn1_tail(r)) <= 1e-13);
        const SeriesValue a = sum_alternating_power_series(rules::harmonic(1.0), r, 1e-13);
        CHECK(std::abs(a.value - alt_log_tail(r)) <= 1e-13);
        const SeriesValue b = sum_alternating_power_series(rules::pair_product(1.0), r, 1e-13);
        CHECK(std::abs(b.value - alt_nn1_tail(r)) <= 1e-13);
    }
}

TEST_CASE("power series at r = 0 and the start index") {
    CHECK(sum_power_series(rules::harmonic(1.0), 0.0).value == 0.0);
    // Sum_{n>=3} r^n / n = log_tail(r) - r^2 / 2
    const double r = 0.4;
    CHECK(std::abs(sum_power_series(rules::harmonic(1.0, 3), r, 1e-14).value -
                   (log_tail(r) - r * r / 2.0)) <= 1e-14);
}

TEST_CASE("power series domain and convergence errors") {
    CHECK_THROWS_AS(sum_power_series(rules::harmonic(1.0), 1.0), DomainError);
    CHECK_THROWS_AS(sum_power_series(rules::harmonic(1.0), -0.1), DomainError);
    CHECK_THROWS_AS(sum_power_series(rules::harmonic(1.0), 0.5, 0.0), DomainError);
    CHECK_THROWS_AS(sum_power_series(rules::harmonic(1.0), std::nan(""), 1e-12), DomainError);
    try {
        sum_power_series(rules::harmonic(1.0), 0.999, 1e-14, 100);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.achieved() > 1e-14);
    }
}

TEST_CASE("alternating constants") {
    const SeriesValue sq = alt_constant(rules::inverse_square(2.0), 1e-13);
    CHECK(std::abs(sq.value - (-0.35506593315177356)) <= 1e-13);
    CHECK(sq.error_bound <= 1e-13);

    const SeriesValue pp = alt_constant(rules::pair_product(2.0), 1e-13);
    CHECK(std::abs(pp.value - (-0.77258872223978124)) <= 1e-13);

    // Sum_{n>=2} (-1)^(n-1) / n = ln 2 - 1, conditionally convergent
    const SeriesValue h = alt_constant(rules::harmonic(1.0), 1e-13);
    CHECK(std::abs(h.value - (std::numbers::ln2 - 1.0)) <= 1e-13);

    // start index shifts the sign with n: from n = 3 the first term is +1/3
    const SeriesValue h3 = alt_constant(rules::harmonic(1.0, 3), 1e-13);
    CHECK(std::abs(h3.value - (std::numbers::ln2 - 0.5)) <= 1e-13);
}

TEST_CASE("alternating constant needs decreasing terms") {
    const CoefficientRule growing{[](long n) { return static_cast<double>(n); }, 1};
    CHECK_THROWS_AS(alt_constant(growing), PreconditionError);
    CHECK_THROWS_AS(alt_constant(rules::harmonic(1.0), -1.0), DomainError);
}

TEST_CASE("g_alt_constant frozen values") {
    CHECK(std::abs(g_alt_constant(1, 1.0).value - (-0.30685281944005469)) <= 1e-12);
    CHECK(std::abs(g_alt_constant(2, 1.0).value - (-0.21460183660255169)) <= 1e-12);
    CHECK(std::abs(g_alt_constant(3, 0.5).value - (-0.25289854421715164)) <= 1e-12);
    CHECK(std::abs(g_alt_constant(1, 0.25).value - (-0.4392553889064479)) <= 1e-12);
    CHECK(std::abs(g_alt_constant(1, 0.01).value - (-0.49750012497501062)) <= 1e-12);
}

TEST_CASE("g_alt_constant against quadrature over a parameter grid") {
    for (int k : {1, 2, 3, 5}) {
        for (double alpha : {0.05, 0.1, 0.5, 1.0, 2.0, 4.0, 10.0}) {
            CAPTURE(k);
            CAPTURE(alpha);
            const SeriesValue v = g_alt_constant(k, alpha, 1e-13);
            CHECK(std::abs(v.value - g_alt_integral(k * alpha)) <= 1e-12);
            CHECK(v.error_bound <= 1e-13);
        }
    }
}

TEST_CASE("reported error bounds cover the true error") {
    for (double alpha : {0.1, 0.5, 0.9}) {
        const CoefficientRule rule = rules::second_order(alpha);
        for (double r : {0.2, 0.6, 0.95}) {
            // partial sums to n = 20000 and beyond are far below 1e-12 here
            double direct = 0.0;
            double rn = r * r;
            for (long n = 2; n < 20000 && rn > 1e-300; ++n, rn *= r) direct += rule(n) * rn;
            const SeriesValue s = sum_power_series(rule, r, 1e-10);
            CHECK(std::abs(s.value - direct) <= s.error_bound + 1e-14);
        }
    }
}

TEST_CASE("g_alt_constant edge cases") {
    CHECK(std::abs(g_alt_constant(2, 1.0).value - (std::numbers::pi / 4.0 - 1.0)) <= 1e-13);
    CHECK(std::abs(g_alt_constant(1, 1e6).value) <= 1e-6);
    CHECK_THROWS_AS(g_alt_constant(1, 0.0), DomainError);
    CHECK_THROWS_AS(g_alt_constant(1, -1.0), DomainError);
    CHECK_THROWS_AS(g_alt_constant(0, 1.0), DomainError);
}

TEST_CASE("more documented series values") {
    CHECK(std::abs(alt_constant(rules::harmonic(2.0)).value - 2.0 * (std::numbers::ln2 - 1.0)) <=
          1e-12);
    CHECK(log_tail(0.5) == doctest::Approx(-std::log(0.5) - 0.5).epsilon(1e-15));
    CHECK(alt_log_tail(1.0) == doctest::Approx(std::numbers::ln2 - 1.0).epsilon(1e-15));
    CHECK(alt_log_tail(0.0) == 0.0);
    CHECK(nn1_tail(0.0) == 0.0);
    const SeriesValue s = sum_power_series(rules::pair_product(2.0), 0.5, 1e-12);
    CHECK(std::abs(s.value - 2.0 * (0.5 + 0.5 * std::log(0.5))) <= 1e-12);
    CHECK_THROWS_AS(log_tail(1.0), DomainError);
}
