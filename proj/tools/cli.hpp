#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lwl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDistinguished = 1;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitError = 2;

/// Runs one command line (args[0] is the program name). Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lwl::cli
