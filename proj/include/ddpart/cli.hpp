#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddpart {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

/// Runs the `ddpart` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ddpart
