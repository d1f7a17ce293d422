#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdspin/sweep.hpp"

namespace qdspin {

enum ExitStatus : int { kExitOk = 0, kExitUsage = 1, kExitIo = 2, kExitVerification = 3 };

struct ParsedArgs {
  SweepConfig config;
  std::optional<int> exit_now;  // set for --help or usage errors
  std::string message;          // help text or error, for the caller to print
};

/// Command-line flags override values from a --config file (TOML/INI keys
/// named after the long flags, e.g. `xb = "0.5:3:50"`).
ParsedArgs parse_config(const std::vector<std::string>& args);
ParsedArgs parse_config(int argc, const char* const* argv);

}  // namespace qdspin
