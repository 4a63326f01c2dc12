#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expansiv {

enum class ErrorKind {
  ZeroPolynomial,
  ConstantPolynomial,
  SolverFailure,
  SingularBeta,
  TupleTooShort,
  NullTuple,
  NoLimit,
  DegreeZero,
  ConditionCountMismatch,
  SizeMismatch,
  Degenerate,
  ZeroEntry,
  EmptyBoundary,
  UndefinedSpeed,
  NotARotation,
  InfiniteBoundary,
  NonExpandable,
  NotOnBoundary,
  BadDegree,
  RootOutsideDisk,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure surfaced by the library carries a kind so callers (and the
// CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace expansiv
