#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idealmatch {

/// Exit codes: 0 success, 1 logical false (equiv, iso, classify), 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name). `-` as a file name
/// reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace idealmatch
