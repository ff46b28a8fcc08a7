#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace norminf {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitLimits = 3,
  kExitIo = 4,
};

/// Runs the command line (args excludes the program name) against the given
/// streams and returns the process exit code. Stdin is read only for
/// `--in -`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace norminf
