#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowzeta::cli {

/// Exit codes. kClaimFailed means the computation ran but the requested
/// exclusion or verification did not hold.
inline constexpr int kOk = 0;
inline constexpr int kClaimFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kDegenerate = 3;

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowzeta::cli
