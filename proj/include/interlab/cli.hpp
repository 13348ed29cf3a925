#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitInvariant = 4;

/// Runs the command line `args` (without the program name). Reports go to
/// `out` (or --out), diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interlab::cli
