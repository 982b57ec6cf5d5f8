#ifndef UEIG_TOOLS_CLI_HPP_
#define UEIG_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ueig::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNotConverged = 3,
  kNumericalFailure = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ueig::cli

#endif  // UEIG_TOOLS_CLI_HPP_
