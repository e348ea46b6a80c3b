#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace factorcrit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Graph input is
/// read from `in` when no --graph/--file option is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace factorcrit::cli
