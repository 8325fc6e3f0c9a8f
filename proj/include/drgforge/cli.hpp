#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drgforge {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
};

/// Parses `args` (without the program name), runs the verb and writes the
/// report to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drgforge
