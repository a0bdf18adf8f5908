#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace depthlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one subcommand. args excludes the program name. Results go to
/// --out when given, else to out; diagnostics go to err as one line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace depthlab::cli
