#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hatgame::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

/// Runs one invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hatgame::cli
