#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace msdecomp::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // irreducible / probably irreducible
inline constexpr int kExitInputError = 2;

// Runs the `msdecomp` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace msdecomp::cli
