#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fltree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // computation or input error, failed verification
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fltree::cli
