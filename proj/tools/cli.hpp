#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degbound::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerdictMismatch = 1,
  kUsage = 2,
  kIoError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degbound::cli
