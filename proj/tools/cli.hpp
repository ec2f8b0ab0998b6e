#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace copsrobber::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kBudget = 3,
  kPrecondition = 4,
  kEnvironment = 5,
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copsrobber::cli
