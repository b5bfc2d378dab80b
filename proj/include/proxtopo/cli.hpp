#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace proxtopo::cli {

enum ExitCode : int {
  kOk = 0,
  kClaimViolated = 2,
  kInputError = 3,
  kResourceGuard = 4,
};

/// Runs one invocation. args excludes the program name. The JSON report goes
/// to out, diagnostics (including wall time) to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proxtopo::cli
