#pragma once

#include <string>
#include <vector>

namespace kronkit::cli {

// 0: accepted / true, 1: rejected / false / unknown, 2: malformed input.
// 3 is reserved for internal failures that are not the input's fault.
enum ExitCode : int { kAccept = 0, kReject = 1, kBadInput = 2, kInternal = 3 };

struct CommandResult {
  int exit_code = kInternal;
  std::string report;   // human-readable, goes to stderr
  std::string payload;  // machine-readable, goes to stdout or --out
};

// args excludes the program name. Never throws.
CommandResult run(const std::vector<std::string>& args);

}  // namespace kronkit::cli
