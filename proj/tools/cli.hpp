#ifndef RELLOC_TOOLS_CLI_HPP
#define RELLOC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace relloc::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage, parse or input error.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;

/// Runs the relloc command line with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relloc::cli

#endif  // RELLOC_TOOLS_CLI_HPP
