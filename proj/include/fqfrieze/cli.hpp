#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fqfrieze {

// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_input = 1,
  exit_budget = 2,
  exit_mismatch = 3,
};

// Subcommands: enumerate, count, verify, map, print, partitions.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqfrieze
