#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

enum ExitCode : int {
  ok = 0,
  failure = 1,
  parse_error = 2,
  domain_error = 3,
  incomplete_resolution = 4,
  verification_mismatch = 5,
};

/// Runs the `toric` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
