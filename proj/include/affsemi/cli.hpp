#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affsemi {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kOk = 0,
  kPrecondition = 1,   ///< mathematical precondition failed (composite p, m = 0, ...)
  kInputError = 2,     ///< unreadable or malformed input, bad arguments
  kVerification = 3,   ///< supplied normalization disagrees with the computed one
  kInternal = 4,       ///< an internal consistency check failed
};

/// Runs the driver on `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affsemi
