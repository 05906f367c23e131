#pragma once

#include <ostream>
#include <span>
#include <string>

namespace foldcf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
/// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace foldcf::cli
