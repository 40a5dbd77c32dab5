#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgs {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verdict failed or a module reported an error
inline constexpr int kExitUsage = 2;    // malformed input, bad flags, bounds exceeded

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgs
