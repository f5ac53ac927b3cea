#ifndef NILPOTENTIA_ERROR_HPP_
#define NILPOTENTIA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nilpotentia {

// Failure categories surfaced by the library.  The CLI maps them onto
// machine-readable error reports; tests match on the kind.
enum class ErrorKind {
  BadShape,
  NonAssociative,
  EmptyGeneratorSet,
  IndexOutOfRange,
  NotRegular,
  NotAGroup,
  NotAnIdeal,
  NotCompletelyZeroSimple,
  ReconstructionMismatch,
  IllDefined,
  NotInjectiveOffTheta,
  CocycleViolation,
  GammaNotHomomorphism,
  SupportMismatch,
  NonAssociativeResult,
  CapExceeded,
  BadParameter,
  NoInverseIdeal,
  TypeInvariantViolation,
  ParseError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotCompletelyZeroSimple: return "NotCompletelyZeroSimple";
    case ErrorKind::ReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorKind::IllDefined: return "IllDefined";
    case ErrorKind::NotInjectiveOffTheta: return "NotInjectiveOffTheta";
    case ErrorKind::CocycleViolation: return "CocycleViolation";
    case ErrorKind::GammaNotHomomorphism: return "GammaNotHomomorphism";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::NonAssociativeResult: return "NonAssociativeResult";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NoInverseIdeal: return "NoInverseIdeal";
    case ErrorKind::TypeInvariantViolation: return "TypeInvariantViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace nilpotentia

#endif  // NILPOTENTIA_ERROR_HPP_
