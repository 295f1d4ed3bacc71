#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qnary::cli {

/// Stable exit codes of the command-line front end.
enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kBadArguments = 2,
  kBudgetExceeded = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qnary::cli
