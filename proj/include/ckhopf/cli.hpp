#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ckhopf {

/// Exit codes: 0 everything passed, 1 a verification failed or output could
/// not be written, 2 usage or parse error.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ckhopf
