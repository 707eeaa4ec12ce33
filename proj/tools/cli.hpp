#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leontief::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitSolverFailure = 3;
inline constexpr int kExitCapExceeded = 4;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leontief::cli
