#pragma once

#include <iosfwd>

namespace rootcluster::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kBudgetExceeded = 2;
inline constexpr int kUsage = 64;
inline constexpr int kDomain = 65;
inline constexpr int kInternal = 70;

/// Parses argv, runs one command and writes its report to `out` (or to the
/// --output file). Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rootcluster::cli
