#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace konig::cli {

/// Process exit codes.
enum ExitCode : int {
  kHolds = 0,           ///< property holds, verification passed, or plain success
  kFails = 1,           ///< property fails or verification failed
  kUsage = 2,           ///< bad arguments or unreadable input
  kBudgetExceeded = 3,  ///< a solver hit its node budget
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace konig::cli
