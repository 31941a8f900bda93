#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bohr/class_model.hpp"
#include "bohr/radius.hpp"

namespace bohr {

/// |h(z) + conj(g(z))| for a truncated extremal, with the bound on the
/// omitted terms at |z|.
struct ExtremalValue {
    double modulus = 0.0;
    double truncation_bound = 0.0;
};

ExtremalValue evaluate_extremal(const ExtremalFunction& f, std::complex<double> z);

/// Circle-minimum estimate of d(f(0), boundary f(D)) for the class
/// extremal.
struct OracleEstimate {
    double value = 0.0;
    long truncation_n = 0;
    int grid_size = 0;
    double rho = 0.0;
    double argmin = 0.0;  ///< angle of the minimizing grid point
    double truncation_bound = 0.0;
};

/// Minimum of |f_ext| over `grid` equally spaced points of |z| = rho,
/// starting at angle 0.
OracleEstimate distance_oracle(const ClassSpec& spec, double rho, int grid, long truncation);

struct CheckReport {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// |bohr_sum(r_f) - d*| <= tol at the solved radius.
CheckReport sharpness_check(const ClassSpec& spec, double tol, const SolverConfig& cfg = {});

struct ScanPoint {
    double r = 0.0;
    double bohr_sum = 0.0;
    double d_star = 0.0;
    bool satisfied = false;
};

struct ScanReport {
    ClassSpec spec;
    std::vector<ScanPoint> grid;
    std::optional<double> first_violation;
    double radius = 0.0;
    double step = 0.0;
    /// first_violation lies in (radius - 1e-9, radius + step], or there is
    /// no violation and r_max <= radius.
    bool consistent = false;
};

/// Bohr inequality on r = i r_max / steps, i = 0..steps.
ScanReport bohr_scan(const ClassSpec& spec, double r_max, int steps, const SolverConfig& cfg = {});

/// For each r: the extremal touches the lower growth bound at
/// r e^{i lower_touch_angle} and the upper one at z = r, and stays inside
/// the envelope on 32 further points of the circle. Truncation is chosen
/// per r so that the omitted tail is below tol / 10.
CheckReport envelope_check(const ClassSpec& spec, std::span<const double> samples, double tol);

/// |f(z)| + |h'(z)| |z| + (M/2) r^2 for the TbM extremal z + (M/2) z^2,
/// which has g = 0 and therefore J_f = |h'|^2.
double jacobian_functional_extremal(double m, std::complex<double> z);

/// jacobian_functional_extremal <= 2 M r^2 + 2 r on each circle, with
/// equality at z = r.
CheckReport jacobian_containment_check(double m, std::span<const double> samples);

// Verification suite behind `bohr verify`.

/// Parameter grid the suite sweeps for a class.
std::vector<ClassSpec> standard_grid(ClassTag tag);

/// Check groups accepted by --only.
const std::vector<std::string>& suite_groups();

struct SuiteOptions {
    std::optional<ClassTag> only_class;
    std::vector<std::string> only_groups;  ///< empty = all
    SolverConfig solver;
};

std::vector<CheckReport> run_suite(const SuiteOptions& options);

}  // namespace bohr
