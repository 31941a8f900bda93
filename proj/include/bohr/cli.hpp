#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bohr::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
    ok = 0,
    check_failed = 1,     ///< verify: at least one check failed
    invalid_input = 2,    ///< bad arguments or parameters outside a class domain
    not_converged = 3,
};

/// Inclusive sweep lo, lo + step, ... up to but excluding hi + step/2.
/// Values are snapped to 12 significant digits so that 0:0.9:0.1 yields
/// 0.3 rather than 0.30000000000000004.
std::vector<double> parse_range(std::string_view text);

/// Runs the tool with `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bohr::cli
