#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace khow {

/// Exit statuses of the `kh` tool.
enum ExitStatus : int {
  kExitAffirmative = 0,  // true / plan found / accepted / countermodel found / no violations
  kExitNegative = 1,
  kExitUsage = 2,  // bad arguments, unreadable files, parse errors
};

/// Runs one `kh` invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace khow
