// Command line front end. execute() is the whole CLI as a function so tests
// can drive it in-process; the binary in tools/ forwards argv.

#pragma once

#include <string>
#include <vector>

namespace thinpos {

struct CommandResult {
  int exit_code = 0;   // 0 ok, 1 domain error, 2 usage error
  std::string out;     // payload (JSON or DOT), newline-terminated
  std::string err;     // diagnostics
};

// argv without the program name, e.g. {"width", "m.json", "--ordering",
// "o.json"}. Never throws; failures are encoded in the exit code.
CommandResult execute(const std::vector<std::string>& args);

}  // namespace thinpos
