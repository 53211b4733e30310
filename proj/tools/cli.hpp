#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qseries::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qseries::cli
