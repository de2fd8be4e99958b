#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decmin::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitLimit = 4;

/// Runs one invocation. args excludes the program name. "-" as a
/// certificate path reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace decmin::cli
