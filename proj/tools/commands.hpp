#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbits_cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kConfigError = 2,
  kLabelError = 3,
};

/// Runs the `orbits` command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbits_cli
