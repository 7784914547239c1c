#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sevac {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
  exit_ok = 0,
  exit_mismatch = 1,
  exit_usage = 2,
  exit_cap_exceeded = 3,
};

/// Runs the `sevac` command line on `args` (program name excluded) and
/// returns the exit status. Normal output goes to `out`, diagnostics to
/// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sevac
