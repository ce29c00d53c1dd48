#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussdistill::cli {

/// Stable exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one of eval, verify, check-lemmas, optimize. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaussdistill::cli
