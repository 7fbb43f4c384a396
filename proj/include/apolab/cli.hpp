#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace apolab {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
};

/// Runs the `apolab` command line. `args[0]` is the program name. Main
/// output goes to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace apolab
