#pragma once

#include <iosfwd>

#include "steiner/tolerance.hpp"

namespace steiner {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,          // success, feasible, valid
  kExitViolation = 1,   // infeasible, or an invariant violation was detected
  kExitInvalidInput = 2,
};

// Default tolerance, overridden by STEINER_TOL when it holds a positive number.
Tolerance tolerance_from_env();

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steiner
