// Acceptance criteria, one PASS/FAIL line each. Exit status is the number
// of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "bohr/cli.hpp"
#include "bohr/verifier.hpp"

using namespace bohr;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.passed) ++failures;
    std::printf("%s %-4s %s [%.3f s] %s\n", o.passed ? "PASS" : "FAIL", id, title, secs,
                o.detail.c_str());
    std::fflush(stdout);
}

std::string num(double x, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

double elapsed(const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    return cli::run(args, out, err);
}

bool all_passed(const std::vector<CheckReport>& reports, std::string& first_failure) {
    for (const CheckReport& r : reports) {
        if (!r.passed) {
            first_failure = r.name + ": " + r.detail;
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    const double ph0 = solve_radius(ClassSpec::ph_alpha(0.0)).radius;

    criterion("AC1", "ph-alpha alpha=0 radius 0.285194", [] {
        RadiusResult res;
        const double t = elapsed([&] { res = solve_radius(ClassSpec::ph_alpha(0.0)); });
        const bool ok = std::abs(res.radius - 0.285194) <= 1e-4 && res.residual <= 1e-10 && t < 1.0;
        return Outcome{ok, "r=" + num(res.radius) + " residual=" + num(res.residual, 3) +
                               " time=" + num(t, 3) + "s"};
    });

    criterion("AC2", "wh-alpha alpha=0 equals ph-alpha alpha=0", [&] {
        const double r = solve_radius(ClassSpec::wh_alpha(0.0)).radius;
        return Outcome{std::abs(r - ph0) <= 1e-9, "diff=" + num(std::abs(r - ph0), 3)};
    });

    criterion("AC3", "gh-k-alpha k=1 alpha=1 equals ph-alpha alpha=0", [&] {
        const double r = solve_radius(ClassSpec::gh_k_alpha(1, 1.0)).radius;
        return Outcome{std::abs(r - ph0) <= 1e-9, "diff=" + num(std::abs(r - ph0), 3)};
    });

    criterion("AC4", "gt-beta closed form vs bisection", [] {
        double worst = 0.0;
        for (int i = 0; i <= 9; ++i) {
            const ClassSpec spec = ClassSpec::gt_beta(0.05 * i);
            const double bis = solve_by_bisection(build_equation(spec)).radius;
            worst = std::max(worst, std::abs(*closed_form_radius(spec) - bis));
        }
        const double at_zero = solve_radius(ClassSpec::gt_beta(0.0)).radius;
        return Outcome{worst <= 1e-10 && at_zero == 0.0,
                       "max diff=" + num(worst, 3) + " r(0)=" + num(at_zero)};
    });

    criterion("AC5", "tb-m quadratic residual and M=1", [] {
        double worst = 0.0;
        for (int i = 1; i <= 19; ++i) {
            const double m = 0.1 * i;
            const double r = *closed_form_radius(ClassSpec::tb_m(m));
            worst = std::max(worst, std::abs(m * r * r + 2.0 * r + (m - 2.0)));
        }
        const double d1 = std::abs(*closed_form_radius(ClassSpec::tb_m(1.0)) -
                                   (std::numbers::sqrt2 - 1.0));
        return Outcome{worst <= 1e-12 && d1 <= 1e-12,
                       "max residual=" + num(worst, 3) + " |r(1)-(sqrt2-1)|=" + num(d1, 3)};
    });

    criterion("AC6", "jacobian radius is half the tb-m radius", [] {
        double worst = 0.0;
        for (int i = 1; i <= 19; ++i) {
            const double m = 0.1 * i;
            worst = std::max(worst, std::abs(jacobian_radius(m) -
                                             *closed_form_radius(ClassSpec::tb_m(m)) / 2.0));
        }
        return Outcome{worst <= 1e-15, "max diff=" + num(worst, 3)};
    });

    criterion("AC7", "sharpness on every standard grid", [] {
        int count = 0;
        for (ClassTag tag : {ClassTag::PhAlpha, ClassTag::GtBeta, ClassTag::WhAlpha,
                             ClassTag::GhKAlpha, ClassTag::TbM, ClassTag::PhM}) {
            for (const ClassSpec& spec : standard_grid(tag)) {
                const CheckReport rep = sharpness_check(spec, 1e-9);
                ++count;
                if (!rep.passed) return Outcome{false, rep.name + ": " + rep.detail};
            }
        }
        return Outcome{true, std::to_string(count) + " parameter sets"};
    });

    criterion("AC8", "distance oracle for ph-alpha alpha=0.3", [] {
        const ClassSpec spec = ClassSpec::ph_alpha(0.3);
        const double d = 1.0 + 1.4 * (std::numbers::ln2 - 1.0);
        double prev = INFINITY;
        bool monotone = true;
        std::string detail;
        const double t = elapsed([&] {
            for (double rho : {0.9, 0.99, 0.999}) {
                const OracleEstimate est = distance_oracle(spec, rho, 720, 100'000);
                const double err = std::abs(est.value - d);
                monotone = monotone && err < prev;
                prev = err;
                detail += "rho=" + num(rho) + ":" + num(est.value, 8) + " ";
            }
        });
        return Outcome{monotone && prev <= 5e-3 && t < 30.0,
                       detail + "d*=" + num(d, 8) + " time=" + num(t, 3) + "s"};
    });

    criterion("AC9", "wh-alpha alpha=1 root against reported 0.58387765", [] {
        const RadiusResult res = solve_radius(ClassSpec::wh_alpha(1.0));
        const bool agrees = std::abs(res.radius - 0.58387765) <= 1e-4;
        return Outcome{res.residual <= 1e-10,
                       "computed " + num(res.radius) + " residual " + num(res.residual, 3) +
                           ", reported 0.58387765: " + (agrees ? "agrees" : "DISAGREES")};
    });

    criterion("AC10", "ph-m domain bound", [] {
        const double bound = ph_m_upper_bound();
        const int reject = run_cli({"radius", "--class", "ph-m", "--m", "1.3"});
        const int accept = run_cli({"radius", "--class", "ph-m", "--m", "1.29"});
        bool boundary = true;
        try {
            validate(ClassSpec::ph_m(bound));
            boundary = false;
        } catch (const ValidationError&) {
        }
        validate(ClassSpec::ph_m(std::nextafter(bound, 0.0)));
        return Outcome{reject == 2 && accept == 0 && boundary,
                       "bound=" + num(bound) + " exit(1.3)=" + std::to_string(reject) +
                           " exit(1.29)=" + std::to_string(accept)};
    });

    criterion("AC11", "property suites and full verify runtime", [] {
        SuiteOptions props;
        props.only_groups = {"monotonicity", "series", "parameter-monotonicity"};
        std::string failure;
        if (!all_passed(run_suite(props), failure)) return Outcome{false, failure};
        std::vector<CheckReport> full;
        const double t = elapsed([&] { full = run_suite({}); });
        const bool ok = all_passed(full, failure) && t < 120.0;
        return Outcome{ok, (failure.empty() ? std::to_string(full.size()) + " checks passed"
                                            : failure) +
                               ", full verify " + num(t, 3) + "s"};
    });

    std::printf("%d criteria failed\n", failures);
    return failures;
}
