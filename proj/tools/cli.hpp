#pragma once

// Command-line front end: eval, table and verify.

#include <ostream>
#include <string>
#include <vector>

namespace orthocorr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitEvaluation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthocorr::cli
