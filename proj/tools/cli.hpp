#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tgembed::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInvalidInput = 2,
  kExitLimitReached = 3,
};

/// Runs one command line (without the program name). The report is fully
/// rendered before anything is written to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgembed::cli
