#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macc {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitInvalid = 2,
  kExitVerification = 3,
  kExitSizeCap = 4,
};

/// Entry point of macc_lab. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macc
