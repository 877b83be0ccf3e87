#pragma once

#include <ostream>

namespace lft {

enum ExitCode : int {
  kExitOk = 0,
  kExitNotInjective = 1,
  kExitInputError = 2,
  kExitGuardExceeded = 3,
};

/// Entry point of the `lft` tool. Artifacts go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lft
