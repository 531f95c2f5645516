#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace parking {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitResource = 3,
  kExitVerification = 4,
};

struct RunConfig {
  std::string command;
  unsigned n = 0;
  unsigned a = 1;
  unsigned k = 2;
  std::string grid;
  std::uint64_t budget = 10'000'000;
  int threads = 1;
  unsigned precision = 15;
  std::string format;  // csv | json | text; empty picks the command default
  std::string out;     // empty writes to the output stream
};

/// Runs `parkstat` with argv-style arguments (args[0] is the program name).
/// All output is assembled in full before it is written.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parking
