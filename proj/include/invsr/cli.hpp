#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invsr {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;     // malformed input or failed axiom
inline constexpr int kExitViolated = 2;  // some theorem verdict is "fails"
inline constexpr int kExitIo = 3;        // unreadable file or size guard

/// Runs one command. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`; "-" as a file name reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace invsr
