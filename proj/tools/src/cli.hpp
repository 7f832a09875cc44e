#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wittforge::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kDomain = 3,
};

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed 9 decimals with trailing zeros removed: 4 -> "4", φ -> "1.618033989".
std::string format_real(double x);

} // namespace wittforge::cli
