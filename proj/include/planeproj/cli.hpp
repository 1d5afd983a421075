#pragma once

#include <iosfwd>

namespace planeproj {

/// Exit codes of the planeproj command.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs `planeproj <command> [flags]` with argv[0] the program name.
/// Normal output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace planeproj
