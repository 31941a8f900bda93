#include "bohr/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "bohr/class_model.hpp"
#include "bohr/radius.hpp"
#include "bohr/record.hpp"
#include "bohr/verifier.hpp"

namespace bohr::cli {

namespace {

constexpr std::string_view jacobian_tag = "tb-m-jacobian";

/// Bad command line; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

double parse_real(std::string_view text, std::string_view what) {
    const std::string s(text);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
        throw UsageError(std::string(what) + ": '" + s + "' is not a number");
    return v;
}

double snap(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

// Raw parameter options shared by the subcommands.
struct ParamArgs {
    std::string class_name;
    std::optional<std::string> alpha, beta, m, k;
};

struct Job {
    std::optional<ClassSpec> spec;  // empty for tb-m-jacobian
    double jacobian_m = 0.0;
    std::map<std::string, double> params;
};

struct ClassChoice {
    std::string name;
    std::optional<ClassTag> tag;  // empty for tb-m-jacobian
};

ClassChoice parse_class(const std::string& name) {
    if (name == jacobian_tag) return {name, std::nullopt};
    const auto tag = parse_tag(name);
    if (!tag)
        throw UsageError("unknown class '" + name +
                         "' (expected ph-alpha, gt-beta, wh-alpha, gh-k-alpha, tb-m, "
                         "tb-m-jacobian or ph-m)");
    return {name, tag};
}

std::vector<std::string> wanted_params(const ClassChoice& c) {
    if (!c.tag) return {"m"};
    switch (*c.tag) {
        case ClassTag::PhAlpha:
        case ClassTag::WhAlpha: return {"alpha"};
        case ClassTag::GtBeta: return {"beta"};
        case ClassTag::GhKAlpha: return {"k", "alpha"};
        case ClassTag::TbM:
        case ClassTag::PhM: return {"m"};
    }
    return {};
}

std::vector<double> values_of(const std::string& name, const std::string& text, bool ranges) {
    if (text.find(':') != std::string::npos) {
        if (!ranges) throw UsageError("--" + name + ": ranges are only accepted by scan");
        return parse_range(text);
    }
    return {parse_real(text, "--" + name)};
}

Job make_job(const ClassChoice& c, const std::map<std::string, double>& p) {
    Job job;
    job.params = p;
    if (!c.tag) {
        job.jacobian_m = p.at("m");
        return job;
    }
    switch (*c.tag) {
        case ClassTag::PhAlpha: job.spec = ClassSpec::ph_alpha(p.at("alpha")); break;
        case ClassTag::GtBeta: job.spec = ClassSpec::gt_beta(p.at("beta")); break;
        case ClassTag::WhAlpha: job.spec = ClassSpec::wh_alpha(p.at("alpha")); break;
        case ClassTag::GhKAlpha: {
            const double k = p.at("k");
            if (!(k >= 1.0 && k == std::floor(k) && k <= 1e6))
                throw ValidationError("gh-k-alpha: k must be a positive integer (got k=" +
                                      format_real(k) + ")");
            job.spec = ClassSpec::gh_k_alpha(static_cast<int>(k), p.at("alpha"));
            break;
        }
        case ClassTag::TbM: job.spec = ClassSpec::tb_m(p.at("m")); break;
        case ClassTag::PhM: job.spec = ClassSpec::ph_m(p.at("m")); break;
    }
    validate(*job.spec);
    return job;
}

// Expands the parameter options into jobs in ascending parameter order
// (outer loop over the first parameter of the class).
std::vector<Job> build_jobs(const ParamArgs& args, bool ranges) {
    const ClassChoice c = parse_class(args.class_name);
    const std::vector<std::string> wanted = wanted_params(c);
    const std::pair<std::string, const std::optional<std::string>*> given[] = {
        {"alpha", &args.alpha}, {"beta", &args.beta}, {"m", &args.m}, {"k", &args.k}};

    std::vector<std::pair<std::string, std::vector<double>>> axes;
    for (const std::string& w : wanted) {
        for (const auto& [name, value] : given) {
            if (name != w) continue;
            if (!*value) throw UsageError(c.name + " requires --" + name);
            axes.emplace_back(name, values_of(name, **value, ranges));
        }
    }
    for (const auto& [name, value] : given) {
        if (*value && std::find(wanted.begin(), wanted.end(), name) == wanted.end())
            throw UsageError("--" + name + " does not apply to " + c.name);
    }

    std::vector<std::map<std::string, double>> points(1);
    for (const auto& [name, values] : axes) {
        std::vector<std::map<std::string, double>> next;
        for (const auto& p : points) {
            for (double v : values) {
                auto q = p;
                q[name] = v;
                next.push_back(std::move(q));
            }
        }
        points = std::move(next);
    }
    std::vector<Job> jobs;
    for (const auto& p : points) jobs.push_back(make_job(c, p));
    return jobs;
}

OutputRecord solve(const std::string& class_name, const Job& job, const SolverConfig& cfg) {
    const RadiusResult res =
        job.spec ? solve_radius(*job.spec, cfg) : solve_jacobian_radius(job.jacobian_m);
    OutputRecord rec;
    rec.class_tag = class_name;
    rec.params = job.params;
    rec.radius = res.radius;
    rec.residual = res.residual;
    rec.method = std::string(method_name(res.method));
    rec.d_star = res.d_star;
    rec.tol = cfg.tol;
    return rec;
}

void print_records(const std::vector<OutputRecord>& recs, const std::string& format,
                   std::ostream& out) {
    if (format == "csv") {
        out << csv_header << '\n';
        for (const OutputRecord& r : recs) out << emit_csv_row(r) << '\n';
    } else {
        for (const OutputRecord& r : recs) out << emit_json(r) << '\n';
    }
}

void add_param_options(CLI::App& cmd, ParamArgs& p, bool ranges) {
    const std::string hint = ranges ? " (value or lo:hi:step)" : "";
    cmd.add_option("--class", p.class_name,
                   "ph-alpha, gt-beta, wh-alpha, gh-k-alpha, tb-m, tb-m-jacobian, ph-m")
        ->required();
    cmd.add_option("--alpha", p.alpha, "alpha" + hint);
    cmd.add_option("--beta", p.beta, "beta" + hint);
    cmd.add_option("--m", p.m, "M" + hint);
    cmd.add_option("--k", p.k, "k-fold symmetry" + hint);
}

double default_tol() {
    if (const char* env = std::getenv("BOHR_TOL")) {
        const double t = parse_real(env, "BOHR_TOL");
        if (!(t > 0.0)) throw UsageError("BOHR_TOL must be positive");
        return t;
    }
    return 1e-12;
}

// Swept parameter and default range for `table`.
std::pair<std::string, std::string> table_axis(const ClassChoice& c) {
    if (!c.tag) return {"m", "0.05:1.95:0.05"};
    switch (*c.tag) {
        case ClassTag::PhAlpha: return {"alpha", "0:0.95:0.05"};
        case ClassTag::GtBeta: return {"beta", "0:0.45:0.05"};
        case ClassTag::WhAlpha: return {"alpha", "0:1:0.05"};
        case ClassTag::GhKAlpha: return {"alpha", "0.1:4:0.1"};
        case ClassTag::TbM: return {"m", "0.05:1.95:0.05"};
        case ClassTag::PhM: return {"m", "0.01:1.29:0.01"};
    }
    return {};
}

}  // namespace

std::vector<double> parse_range(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t from = 0;
    for (std::size_t pos; (pos = text.find(':', from)) != std::string_view::npos; from = pos + 1)
        parts.push_back(text.substr(from, pos - from));
    parts.push_back(text.substr(from));
    if (parts.size() != 3) throw UsageError("range '" + std::string(text) + "' is not lo:hi:step");
    const double lo = parse_real(parts[0], "range lo");
    const double hi = parse_real(parts[1], "range hi");
    const double step = parse_real(parts[2], "range step");
    if (!(step > 0.0)) throw UsageError("range step must be positive");
    if (!(hi >= lo)) throw UsageError("range hi must be >= lo");
    const double count = std::ceil((hi - lo) / step + 0.5);
    if (count > 1e6) throw UsageError("range has more than 10^6 points");
    std::vector<double> out;
    for (long i = 0; i < static_cast<long>(count); ++i)
        out.push_back(snap(lo + static_cast<double>(i) * step));
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bohr radii for classes of harmonic mappings", "bohr"};
    app.require_subcommand(1);

    std::optional<double> tol;
    int max_iter = 200;
    std::string format = "json";
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "root tolerance (default 1e-12, env BOHR_TOL)");
        cmd->add_option("--max-iter", max_iter, "bisection iteration cap")->capture_default_str();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    };

    ParamArgs params;
    auto* radius_cmd = app.add_subcommand("radius", "radius for one parameter set");
    add_param_options(*radius_cmd, params, false);
    add_common(radius_cmd);
    add_format(radius_cmd);

    auto* scan_cmd = app.add_subcommand("scan", "parameter sweep, or Bohr inequality on an r-grid");
    add_param_options(*scan_cmd, params, true);
    std::optional<double> r_max;
    int steps = 100;
    scan_cmd->add_option("--r-max", r_max, "scan the Bohr inequality on [0, r-max] instead");
    scan_cmd->add_option("--steps", steps, "grid steps for --r-max")->capture_default_str();
    add_common(scan_cmd);
    add_format(scan_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    std::optional<std::string> verify_class;
    std::vector<std::string> only;
    verify_cmd->add_option("--class", verify_class, "restrict to one class");
    verify_cmd->add_option("--only", only, "check groups to run")->delimiter(',');
    std::string verify_format = "text";
    verify_cmd->add_option("--format", verify_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    add_common(verify_cmd);

    auto* table_cmd = app.add_subcommand("table", "two-column parameter,radius CSV");
    std::string table_class;
    std::optional<std::string> table_range, table_k;
    table_cmd->add_option("--class", table_class, "class tag")->required();
    table_cmd->add_option("--range", table_range, "lo:hi:step of the swept parameter");
    table_cmd->add_option("--k", table_k, "k for gh-k-alpha (default 1)");
    table_cmd->add_option("--tol", tol, "root tolerance (default 1e-12, env BOHR_TOL)");
    table_cmd->add_option("--max-iter", max_iter, "bisection iteration cap")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "bohr: " << e.what() << '\n';
        return invalid_input;
    }

    try {
        SolverConfig cfg;
        cfg.tol = tol ? *tol : default_tol();
        if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
        if (max_iter < 1) throw UsageError("--max-iter must be >= 1");
        cfg.series_tol = cfg.tol / 10.0;
        cfg.max_iter = max_iter;

        if (radius_cmd->parsed()) {
            const auto jobs = build_jobs(params, false);
            print_records({solve(params.class_name, jobs.front(), cfg)}, format, out);
            return ok;
        }

        if (scan_cmd->parsed()) {
            const auto jobs = build_jobs(params, true);
            if (r_max) {
                if (jobs.size() != 1 || !jobs.front().spec)
                    throw UsageError("--r-max needs a single parameter set of a Bohr class");
                const ScanReport rep = bohr_scan(*jobs.front().spec, *r_max, steps, cfg);
                if (format == "csv") {
                    out << "r,bohr_sum,d_star,satisfied\n";
                    for (const ScanPoint& p : rep.grid)
                        out << format_real(p.r) << ',' << format_real(p.bohr_sum) << ','
                            << format_real(p.d_star) << ',' << (p.satisfied ? 1 : 0) << '\n';
                } else {
                    for (const ScanPoint& p : rep.grid)
                        out << nlohmann::json{{"r", p.r},
                                              {"bohr_sum", p.bohr_sum},
                                              {"d_star", p.d_star},
                                              {"satisfied", p.satisfied}}
                                   .dump()
                            << '\n';
                }
                if (!rep.consistent)
                    err << "bohr: first violation does not match the solved radius "
                        << format_real(rep.radius) << '\n';
                return rep.consistent ? ok : check_failed;
            }
            std::vector<OutputRecord> recs;
            for (const Job& job : jobs) recs.push_back(solve(params.class_name, job, cfg));
            print_records(recs, format, out);
            return ok;
        }

        if (verify_cmd->parsed()) {
            SuiteOptions opt;
            opt.solver = cfg;
            opt.only_groups = only;
            if (verify_class) {
                const ClassChoice c = parse_class(*verify_class);
                opt.only_class = c.tag ? *c.tag : ClassTag::TbM;
            }
            const auto reports = run_suite(opt);
            if (verify_format == "csv") out << "check,passed,detail\n";
            std::size_t failed = 0;
            for (const CheckReport& r : reports) {
                if (verify_format == "json") {
                    out << nlohmann::json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}}
                               .dump()
                        << '\n';
                } else if (verify_format == "csv") {
                    out << '"' << r.name << "\"," << (r.passed ? 1 : 0) << ",\"" << r.detail << "\"\n";
                } else {
                    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
                }
                if (!r.passed) {
                    ++failed;
                    err << "bohr: FAILED " << r.name << ": " << r.detail << '\n';
                }
            }
            err << "bohr: " << reports.size() - failed << "/" << reports.size()
                << " checks passed\n";
            return failed == 0 ? ok : check_failed;
        }

        // table
        const ClassChoice c = parse_class(table_class);
        const auto [axis, default_range] = table_axis(c);
        if (table_k && !(c.tag && *c.tag == ClassTag::GhKAlpha))
            throw UsageError("--k does not apply to " + c.name);
        ParamArgs p;
        p.class_name = table_class;
        const std::string range = table_range.value_or(default_range);
        if (axis == "alpha") p.alpha = range;
        if (axis == "beta") p.beta = range;
        if (axis == "m") p.m = range;
        if (c.tag && *c.tag == ClassTag::GhKAlpha) p.k = table_k.value_or("1");
        out << axis << ",radius\n";
        for (const Job& job : build_jobs(p, true)) {
            const OutputRecord rec = solve(table_class, job, cfg);
            out << format_real(job.params.at(axis)) << ',' << format_real(rec.radius) << '\n';
        }
        return ok;
    } catch (const UsageError& e) {
        err << "bohr: " << e.what() << '\n';
        return invalid_input;
    } catch (const ValidationError& e) {
        err << "bohr: " << e.what() << '\n';
        return invalid_input;
    } catch (const DomainError& e) {
        err << "bohr: " << e.what() << '\n';
        return invalid_input;
    } catch (const ConvergenceError& e) {
        err << "bohr: " << e.what() << '\n';
        return not_converged;
    } catch (const std::invalid_argument& e) {
        err << "bohr: " << e.what() << '\n';
        return invalid_input;
    } catch (const std::exception& e) {
        err << "bohr: " << e.what() << '\n';
        return not_converged;
    }
}

}  // namespace bohr::cli
