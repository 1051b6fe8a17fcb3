#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace offsetwords::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, budget_refused = 3 };

/// Runs the command line `offsetwords <args...>` (args excludes the program
/// name) and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace offsetwords::cli
