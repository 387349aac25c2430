#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coalg {

enum class ErrorKind {
  EnumerationLimitExceeded,
  TypeMismatch,
  NotAPullback,
  InvariantViolation,
  FunctorMismatch,
  CodomainMismatch,
  NonDeterministicProduct,
  ObjectMismatch,
  NotMorphism,
  NotSubcoalgebra,
  NotPartialMono,
  DomainNotContained,
  NotDivisible,
  NotFixing,
  NotTotal,
  Unsupported,
  UnknownElement,
  TrivialFunctor,
  ParseError,
  ValidationError,
  UnknownBinding,
  UnknownSuite,
};

std::string_view error_name(ErrorKind kind);

/// Every failure raised by the library. The kind name is stable and is what
/// the command-line tool prints, so scripts can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace coalg
