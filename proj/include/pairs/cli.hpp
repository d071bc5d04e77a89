#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pairs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCrosscheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Parses argv (without the program name), runs the subcommand and renders
/// the result to `out`; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairs::cli
