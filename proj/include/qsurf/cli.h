#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsurf {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitBudget = 3, kExitInvariant = 4 };

/// Runs the command line `args` (without the program name). Results go to `out` unless --out names a
/// file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsurf
