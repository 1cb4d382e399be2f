#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace muflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitInternalError = 3;

// Runs the command line `args` (program name first) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace muflow::cli
