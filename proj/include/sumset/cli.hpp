#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumset::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      // parse or precondition failure
inline constexpr int kExitExhausted = 3;  // selection cascade found no witness
inline constexpr int kExitCheckFailed = 4;

// Runs `sumset <args...>` writing reports to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumset::cli
