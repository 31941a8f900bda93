#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "bohr/verifier.hpp"

namespace bohr {

namespace {

constexpr ClassTag all_tags[] = {ClassTag::PhAlpha, ClassTag::GtBeta, ClassTag::WhAlpha,
                                 ClassTag::GhKAlpha, ClassTag::TbM, ClassTag::PhM};

// Published decimals that the checks compare against.
constexpr double reported_wh1_radius = 0.58387765;
constexpr double reported_ph0_radius = 0.285194;

std::string fmt(double x, int digits = 12) {
    std::ostringstream out;
    out.precision(digits);
    out << x;
    return out.str();
}

std::string name_of(const ClassSpec& spec) {
    return std::string(tag_name(spec.tag)) + " " + describe(spec);
}

bool closed_form_class(ClassTag t) { return t == ClassTag::GtBeta || t == ClassTag::TbM; }

// One representative member per class for the expensive checks.
ClassSpec representative(ClassTag tag) {
    switch (tag) {
        case ClassTag::PhAlpha: return ClassSpec::ph_alpha(0.3);
        case ClassTag::GtBeta: return ClassSpec::gt_beta(0.25);
        case ClassTag::WhAlpha: return ClassSpec::wh_alpha(0.5);
        case ClassTag::GhKAlpha: return ClassSpec::gh_k_alpha(2, 1.0);
        case ClassTag::TbM: return ClassSpec::tb_m(1.0);
        case ClassTag::PhM: return ClassSpec::ph_m(0.5);
    }
    return {};
}

std::vector<double> steps(double lo, double hi, double step) {
    std::vector<double> out;
    const long count = std::lround(std::floor((hi - lo) / step + 0.5)) + 1;
    for (long i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
    return out;
}

class Runner {
public:
    explicit Runner(const SuiteOptions& opt) : opt_(opt) {}

    bool wants_group(const std::string& g) const {
        return opt_.only_groups.empty() ||
               std::find(opt_.only_groups.begin(), opt_.only_groups.end(), g) !=
                   opt_.only_groups.end();
    }
    bool wants_class(ClassTag t) const { return !opt_.only_class || *opt_.only_class == t; }

    std::vector<ClassTag> classes() const {
        std::vector<ClassTag> out;
        for (ClassTag t : all_tags)
            if (wants_class(t)) out.push_back(t);
        return out;
    }

    // Runs `body`, turning a thrown error into a failed check.
    void check(const std::string& name, const std::function<CheckReport()>& body) {
        try {
            reports_.push_back(body());
        } catch (const std::exception& e) {
            reports_.push_back({name, false, std::string("error: ") + e.what()});
        }
    }

    const SolverConfig& solver() const { return opt_.solver; }
    std::vector<CheckReport> take() { return std::move(reports_); }

private:
    const SuiteOptions& opt_;
    std::vector<CheckReport> reports_;
};

void series_checks(Runner& run) {
    // Generic truncation engine against the closed-form fast paths.
    const ClassSpec closed[] = {ClassSpec::ph_alpha(0.0), ClassSpec::ph_alpha(0.6),
                                ClassSpec::gt_beta(0.2),  ClassSpec::wh_alpha(0.0),
                                ClassSpec::tb_m(1.5),     ClassSpec::ph_m(1.0)};
    for (const ClassSpec& spec : closed) {
        if (!run.wants_class(spec.tag)) continue;
        const std::string name = "series generic-vs-closed " + name_of(spec);
        run.check(name, [&] {
            double worst = 0.0;
            for (double r : steps(0.1, 0.9, 0.1)) {
                const double fast = bohr_sum(spec, r).value;
                const double slow = r + sum_power_series(bound_rule(spec), r, 1e-13).value;
                worst = std::max(worst, std::abs(fast - slow));
            }
            return CheckReport{name, worst <= 1e-12, "max diff " + fmt(worst, 3)};
        });
    }

    // Accelerated alternating constants against a brute-force sum of 10^6
    // terms (absolutely convergent rules only).
    if (run.wants_class(ClassTag::WhAlpha)) {
        for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
            const std::string name = "series alt-constant-vs-direct wh-alpha alpha=" + fmt(alpha);
            run.check(name, [&] {
                const CoefficientRule rule = rules::second_order(alpha, 2);
                const SeriesValue fast = alt_constant(rule, 1e-13);
                double direct = 0.0;
                for (long n = 1'000'001; n >= 2; --n)
                    direct += (n % 2 == 0 ? -1.0 : 1.0) * rule(n);
                const double diff = std::abs(fast.value - direct);
                return CheckReport{name, diff <= 1e-10,
                                   "diff " + fmt(diff, 3) + " bound " + fmt(fast.error_bound, 3)};
            });
        }
    }
}

void sharpness_checks(Runner& run) {
    for (ClassTag tag : run.classes()) {
        const double tol = closed_form_class(tag) ? 1e-12 : 1e-9;
        for (const ClassSpec& spec : standard_grid(tag)) {
            run.check("sharpness " + name_of(spec),
                      [&] { return sharpness_check(spec, tol, run.solver()); });
        }
    }
}

void closed_form_checks(Runner& run) {
    if (run.wants_class(ClassTag::GtBeta)) {
        const std::string name = "closed-form gt-beta vs bisection";
        run.check(name, [&] {
            double worst = 0.0;
            bool zero_ok = true;
            for (const ClassSpec& spec : standard_grid(ClassTag::GtBeta)) {
                const double cf = *closed_form_radius(spec);
                const double bis =
                    solve_by_bisection(build_equation(spec, run.solver()), run.solver()).radius;
                worst = std::max(worst, std::abs(cf - bis));
                if (spec.beta == 0.0) zero_ok = cf == 0.0;
            }
            return CheckReport{name, worst <= 1e-10 && zero_ok,
                               "max |closed-bisection| " + fmt(worst, 3)};
        });
    }
    if (run.wants_class(ClassTag::TbM)) {
        const std::string name = "closed-form tb-m quadratic residual";
        run.check(name, [&] {
            double worst_res = 0.0;
            double worst_bis = 0.0;
            double worst_jac = 0.0;
            for (const ClassSpec& spec : standard_grid(ClassTag::TbM)) {
                const double m = spec.m;
                const double r = *closed_form_radius(spec);
                worst_res = std::max(worst_res, std::abs(m * r * r + 2.0 * r + (m - 2.0)));
                const double bis =
                    solve_by_bisection(build_equation(spec, run.solver()), run.solver()).radius;
                worst_bis = std::max(worst_bis, std::abs(r - bis));
                worst_jac = std::max(worst_jac, std::abs(jacobian_radius(m) - r / 2.0));
            }
            const double at_one = std::abs(*closed_form_radius(ClassSpec::tb_m(1.0)) -
                                           (std::numbers::sqrt2 - 1.0));
            const bool ok = worst_res <= 1e-12 && worst_bis <= 1e-10 && worst_jac <= 1e-15 &&
                            at_one <= 1e-12;
            return CheckReport{name, ok,
                               "residual " + fmt(worst_res, 3) + ", vs bisection " +
                                   fmt(worst_bis, 3) + ", jacobian halving " +
                                   fmt(worst_jac, 3) + ", M=1 vs sqrt2-1 " + fmt(at_one, 3)};
        });
    }
}

void monotonicity_checks(Runner& run) {
    for (ClassTag tag : run.classes()) {
        for (const ClassSpec& spec : standard_grid(tag)) {
            const std::string name = "monotonicity " + name_of(spec);
            run.check(name, [&] {
                const BohrEquation eq = build_equation(spec, run.solver());
                double prev = eq(0.0).value;
                for (int i = 1; i <= 100; ++i) {
                    const double v = eq(i / 101.0).value;
                    if (!(v > prev))
                        return CheckReport{name, false, "H not increasing at r=" + fmt(i / 101.0)};
                    prev = v;
                }
                // Exactly one sign change on a 1000-point grid of (0, 1 - 1e-9).
                int changes = 0;
                bool positive = eq(bracket_upper / 1001.0).value > 0.0;
                for (int i = 2; i <= 1000; ++i) {
                    const double r = bracket_upper * i / 1001.0;
                    const bool p = eq(r).value > 0.0;
                    if (p != positive) ++changes;
                    positive = p;
                }
                const bool degenerate = eq(0.0).value >= 0.0;
                const bool ok = degenerate ? changes == 0 && positive : changes <= 1 && positive;
                return CheckReport{name, ok, std::to_string(changes) + " sign change(s)"};
            });
        }
    }

}

void parameter_checks(Runner& run) {
    auto radii = [&](const std::vector<ClassSpec>& specs) {
        std::vector<double> out;
        for (const ClassSpec& s : specs) out.push_back(solve_radius(s, run.solver()).radius);
        return out;
    };
    if (run.wants_class(ClassTag::PhAlpha)) {
        const std::string name = "parameter-monotonicity ph-alpha nondecreasing in alpha";
        run.check(name, [&] {
            std::vector<ClassSpec> specs;
            for (double a : steps(0.0, 0.8, 0.2)) specs.push_back(ClassSpec::ph_alpha(a));
            const auto r = radii(specs);
            return CheckReport{name, std::is_sorted(r.begin(), r.end()),
                               fmt(r.front()) + " .. " + fmt(r.back())};
        });
    }
    for (ClassTag tag : {ClassTag::TbM, ClassTag::PhM}) {
        if (!run.wants_class(tag)) continue;
        const std::string name =
            "parameter-monotonicity " + std::string(tag_name(tag)) + " nonincreasing in M";
        run.check(name, [&] {
            const auto r = radii(standard_grid(tag));
            return CheckReport{name, std::is_sorted(r.rbegin(), r.rend()),
                               fmt(r.front()) + " .. " + fmt(r.back())};
        });
    }
}

void identity_checks(Runner& run) {
    if (!run.wants_class(ClassTag::PhAlpha) && !run.wants_class(ClassTag::WhAlpha) &&
        !run.wants_class(ClassTag::GhKAlpha))
        return;
    const std::string name = "identities gh-k-alpha k=1 alpha=1 = ph-alpha alpha=0 = wh-alpha alpha=0";
    run.check(name, [&] {
        const double ph = solve_radius(ClassSpec::ph_alpha(0.0), run.solver()).radius;
        const double wh = solve_radius(ClassSpec::wh_alpha(0.0), run.solver()).radius;
        const double gh = solve_radius(ClassSpec::gh_k_alpha(1, 1.0), run.solver()).radius;
        bool coeff = true;
        for (long n = 2; n <= 50; ++n) {
            const double base = coefficient_bound(ClassSpec::ph_alpha(0.0), n);
            coeff = coeff && coefficient_bound(ClassSpec::wh_alpha(0.0), n) == base &&
                    std::abs(coefficient_bound(ClassSpec::gh_k_alpha(1, 1.0), n) - base) <=
                        1e-16;
        }
        const double spread = std::max({ph, wh, gh}) - std::min({ph, wh, gh});
        return CheckReport{name, spread <= 1e-9 && coeff,
                           "ph=" + fmt(ph) + " wh=" + fmt(wh) + " gh=" + fmt(gh)};
    });
}

void envelope_checks(Runner& run) {
    const double samples[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    for (ClassTag tag : run.classes()) {
        const auto grid = standard_grid(tag);
        for (const ClassSpec& spec : {grid.front(), grid[grid.size() / 2], grid.back()})
            run.check("envelope " + name_of(spec),
                      [&] { return envelope_check(spec, samples, 1e-9); });
    }
}

void jacobian_checks(Runner& run) {
    if (run.wants_class(ClassTag::TbM)) {
        const double radii[] = {0.05, 0.2, 0.4, 0.6, 0.8, 0.95};
        for (const ClassSpec& spec : standard_grid(ClassTag::TbM))
            run.check("jacobian " + name_of(spec),
                      [&] { return jacobian_containment_check(spec.m, radii); });
    }
}

void distance_checks(Runner& run) {
    for (ClassTag tag : run.classes()) {
        const ClassSpec spec = representative(tag);
        const std::string name = "distance " + name_of(spec);
        run.check(name, [&] {
            const double d = distance_bound(spec).value;
            double prev_err = std::numeric_limits<double>::infinity();
            bool improving = true;
            OracleEstimate last;
            for (double rho : {0.9, 0.99, 0.999}) {
                last = distance_oracle(spec, rho, 720, spec.tag == ClassTag::TbM ? 2 : 100'000);
                const double err = std::abs(last.value - d);
                improving = improving && err < prev_err;
                prev_err = err;
            }
            const bool ok = improving && prev_err <= 5e-3;
            return CheckReport{name, ok,
                               "d*=" + fmt(d) + " circle-min(0.999)=" + fmt(last.value) +
                                   " at theta=" + fmt(last.argmin, 6)};
        });
    }
}

void scan_checks(Runner& run) {
    for (ClassTag tag : run.classes()) {
        for (const ClassSpec& spec : {representative(tag), standard_grid(tag).front()}) {
            const std::string name = "scan " + name_of(spec);
            run.check(name, [&] {
                const double rf = solve_radius(spec, run.solver()).radius;
                const double r_max = std::min(0.95, 2.0 * rf + 0.05);
                const ScanReport rep = bohr_scan(spec, r_max, 500, run.solver());
                return CheckReport{name, rep.consistent,
                                   "r_f=" + fmt(rf) + " first violation=" +
                                       (rep.first_violation ? fmt(*rep.first_violation) : "none")};
            });
        }
    }
}

void reported_value_checks(Runner& run) {
    if (run.wants_class(ClassTag::PhAlpha)) {
        const std::string name = "reported ph-alpha alpha=0 radius 0.285194";
        run.check(name, [&] {
            const RadiusResult res = solve_radius(ClassSpec::ph_alpha(0.0), run.solver());
            const double diff = std::abs(res.radius - reported_ph0_radius);
            return CheckReport{name, diff <= 1e-4 && res.residual <= 1e-10,
                               "computed " + fmt(res.radius) + " residual " + fmt(res.residual, 3)};
        });
    }
    if (run.wants_class(ClassTag::WhAlpha)) {
        const std::string name = "reported wh-alpha alpha=1 radius";
        run.check(name, [&] {
            const RadiusResult res = solve_radius(ClassSpec::wh_alpha(1.0), run.solver());
            const bool agrees = std::abs(res.radius - reported_wh1_radius) <= 1e-4;
            return CheckReport{name, res.residual <= 1e-10,
                               "computed " + fmt(res.radius) + " (residual " +
                                   fmt(res.residual, 3) + ") vs reported " +
                                   fmt(reported_wh1_radius) +
                                   (agrees ? ": agrees" : ": DISAGREES, equation residual governs")};
        });
    }
}

}  // namespace

std::vector<ClassSpec> standard_grid(ClassTag tag) {
    std::vector<ClassSpec> out;
    switch (tag) {
        case ClassTag::PhAlpha:
            for (double a : steps(0.0, 0.9, 0.1)) out.push_back(ClassSpec::ph_alpha(a));
            break;
        case ClassTag::GtBeta:
            for (double b : steps(0.0, 0.45, 0.05)) out.push_back(ClassSpec::gt_beta(b));
            break;
        case ClassTag::WhAlpha:
            for (double a : steps(0.0, 1.0, 0.25)) out.push_back(ClassSpec::wh_alpha(a));
            break;
        case ClassTag::GhKAlpha:
            for (int k : {1, 2, 3})
                for (double a : {0.5, 1.0, 2.0, 4.0}) out.push_back(ClassSpec::gh_k_alpha(k, a));
            break;
        case ClassTag::TbM:
            for (double m : steps(0.1, 1.9, 0.1)) out.push_back(ClassSpec::tb_m(m));
            break;
        case ClassTag::PhM:
            for (double m : steps(0.1, 1.2, 0.1)) out.push_back(ClassSpec::ph_m(m));
            out.push_back(ClassSpec::ph_m(1.29));
            break;
    }
    return out;
}

const std::vector<std::string>& suite_groups() {
    static const std::vector<std::string> groups = {
        "series",     "sharpness", "closed-form", "monotonicity", "parameter-monotonicity",
        "identities", "envelope",  "distance",    "scan",         "jacobian",
        "reported-values"};
    return groups;
}

std::vector<CheckReport> run_suite(const SuiteOptions& options) {
    for (const std::string& g : options.only_groups)
        if (std::find(suite_groups().begin(), suite_groups().end(), g) == suite_groups().end())
            throw std::invalid_argument("unknown check group '" + g + "'");

    Runner run(options);
    if (run.wants_group("series")) series_checks(run);
    if (run.wants_group("sharpness")) sharpness_checks(run);
    if (run.wants_group("closed-form")) closed_form_checks(run);
    if (run.wants_group("monotonicity")) monotonicity_checks(run);
    if (run.wants_group("parameter-monotonicity")) parameter_checks(run);
    if (run.wants_group("identities")) identity_checks(run);
    if (run.wants_group("envelope")) envelope_checks(run);
    if (run.wants_group("distance")) distance_checks(run);
    if (run.wants_group("scan")) scan_checks(run);
    if (run.wants_group("jacobian")) jacobian_checks(run);
    if (run.wants_group("reported-values")) reported_value_checks(run);
    return run.take();
}

}  // namespace bohr
