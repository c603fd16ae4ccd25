#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcdens::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFail = 2;

// Parses `args` (without the program name) and runs the selected subcommand.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gcdens::cli
