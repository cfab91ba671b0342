#include "potsum/error.hpp"

namespace potsum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::CharacterUndefined: return "CharacterUndefined";
    case ErrorKind::UndefinedAtZero: return "UndefinedAtZero";
    case ErrorKind::CaseInapplicable: return "CaseInapplicable";
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::BoundInapplicable: return "BoundInapplicable";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace potsum
