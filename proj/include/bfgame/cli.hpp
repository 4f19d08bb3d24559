#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bfgame {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // NOT-OPTIMAL, sweep counterexample, replay mismatch
  kExitUsage = 2,   // bad flags, unreadable or invalid input, caps exceeded
};

/// Runs one subcommand: simulate, verify, theorem-sweep, msts, replay, play.
/// args[0] is the program name. Diagnostics go to `err`.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bfgame
