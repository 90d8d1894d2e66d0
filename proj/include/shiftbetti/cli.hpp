#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftbetti {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs the command line. `args[0]` is the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftbetti
