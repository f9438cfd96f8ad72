#pragma once

#include <iosfwd>

namespace zdg {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 2,
  kExitInput = 3,
  kExitResource = 4,
};

/// The zdg command line. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zdg
