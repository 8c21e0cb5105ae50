#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsz {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,   // e.g. `member` answered no
  kExitUsage = 2,      // bad arguments, unreadable or malformed input
  kExitInvariant = 3,  // an internal invariant failed
};

/// Runs the command line `args` (args[0] is the program name) and writes the
/// result to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsz
