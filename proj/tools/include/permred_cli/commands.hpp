#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permred::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verification did not go through
inline constexpr int kExitUsage = 2;

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permred::cli
