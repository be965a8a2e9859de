#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yapsc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitErrors = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Runs the command line `args` (without the program name). `in` feeds
/// `remap` when no --stderr file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace yapsc
