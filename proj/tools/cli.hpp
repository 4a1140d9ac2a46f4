#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superdiv::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superdiv::cli
