#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gotzmann::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or definedness error.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gotzmann::cli
