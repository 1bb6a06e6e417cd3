#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iesieve::cli {

/// Exit codes of the iesieve tool.
enum ExitCode : int {
  kSuccess = 0,
  kNotFound = 1,     ///< kpath found no path
  kUsageError = 2,   ///< bad flags, unreadable or malformed input
  kSizeCap = 3,      ///< instance exceeds an operation's size cap
  kInternalError = 4 ///< an internal consistency check failed
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics (one "error: ..." line on failure, trace output) to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iesieve::cli
