#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biortho::cli {

enum ExitCode { kOk = 0, kUsage = 2, kDrift = 3, kNonConvergence = 4 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biortho::cli
