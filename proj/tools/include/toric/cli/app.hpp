#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toric::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kInvalidInput = 2, kInternal = 3 };

/// Runs one toric-csm invocation. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
