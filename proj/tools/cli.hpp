#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cactus::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2 };

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cactus::cli
