#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitBadInput = 2;

/// Runs one toricfano invocation. args excludes the program name.
/// Returns 0 when every check passed, 1 on verification violations and 2 on
/// malformed input or a failed precondition.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
