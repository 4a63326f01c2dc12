#include "expansiv/errors.hpp"

namespace expansiv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::SolverFailure: return "SolverFailure";
    case ErrorKind::SingularBeta: return "SingularBeta";
    case ErrorKind::TupleTooShort: return "TupleTooShort";
    case ErrorKind::NullTuple: return "NullTuple";
    case ErrorKind::NoLimit: return "NoLimit";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::ConditionCountMismatch: return "ConditionCountMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::EmptyBoundary: return "EmptyBoundary";
    case ErrorKind::UndefinedSpeed: return "UndefinedSpeed";
    case ErrorKind::NotARotation: return "NotARotation";
    case ErrorKind::InfiniteBoundary: return "InfiniteBoundary";
    case ErrorKind::NonExpandable: return "NonExpandable";
    case ErrorKind::NotOnBoundary: return "NotOnBoundary";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::RootOutsideDisk: return "RootOutsideDisk";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace expansiv
