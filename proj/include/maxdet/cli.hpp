#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxdet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the `maxdet` binary and the tests. `args[0]` is the program name.
/// JSON results go to `out`, progress and diagnostics to `err`; `in` backs the "-" file name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace maxdet::cli
