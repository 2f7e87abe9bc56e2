#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyctrl::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kControllable = 0,
  kUncontrollable = 1,
  kIndeterminate = 2,
  kUsage = 3,   ///< bad flags, guard violations, invalid arguments
  kIo = 4,      ///< unreadable input / unwritable output
  kParse = 5,   ///< polynomial or JSON syntax
  kSchema = 6,  ///< well-formed JSON with the wrong shape
  kInternal = 8,
};

/// Runs one command line (args[0] is the program name). JSON results go to
/// `out`, human-readable diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyctrl::cli
