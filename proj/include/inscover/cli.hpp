#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inscover::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetExhausted = 3,
};

// Runs one command line. args[0] is the program name. Reports go to `out`,
// diagnostics and run statistics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inscover::cli
