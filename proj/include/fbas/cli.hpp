#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fbas::cli {

inline constexpr int kExitMatch = 0;
inline constexpr int kExitNoMatch = 1;
inline constexpr int kExitError = 2;

/// Entry point for the `fbas` tool. `args` excludes the program name.
/// Returns the process exit status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fbas::cli
