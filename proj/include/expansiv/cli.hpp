#pragma once

#include <iosfwd>

#include "expansiv/errors.hpp"

namespace expansiv::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMathematicalFailure = 1,  // a fail verdict, a violation, or an undefined quantity
  kUsageError = 2,
  kSolverFailure = 3,
};

int exit_code(ErrorKind kind);

/// Full command line front end; `main` only forwards to it.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace expansiv::cli
