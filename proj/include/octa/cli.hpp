#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace octa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command line (without the program name). Errors are reported as
/// a single "error: ..." line on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octa::cli
