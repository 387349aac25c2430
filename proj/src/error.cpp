#include "coalg/error.hpp"

namespace coalg {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EnumerationLimitExceeded: return "EnumerationLimitExceeded";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NotAPullback: return "NotAPullback";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::FunctorMismatch: return "FunctorMismatch";
    case ErrorKind::CodomainMismatch: return "CodomainMismatch";
    case ErrorKind::NonDeterministicProduct: return "NonDeterministicProduct";
    case ErrorKind::ObjectMismatch: return "ObjectMismatch";
    case ErrorKind::NotMorphism: return "NotMorphism";
    case ErrorKind::NotSubcoalgebra: return "NotSubcoalgebra";
    case ErrorKind::NotPartialMono: return "NotPartialMono";
    case ErrorKind::DomainNotContained: return "DomainNotContained";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotFixing: return "NotFixing";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::TrivialFunctor: return "TrivialFunctor";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownBinding: return "UnknownBinding";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

}  // namespace coalg
