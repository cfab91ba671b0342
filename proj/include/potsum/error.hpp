#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace potsum {

enum class ErrorKind {
  InvalidPrime,
  InvalidModulus,
  LimitExceeded,
  DivisionByZero,
  InvalidExponent,
  InvalidOrder,
  InvalidArgument,
  ContextMismatch,
  CharacterUndefined,
  UndefinedAtZero,
  CaseInapplicable,
  InvalidCharacter,
  BoundInapplicable,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace potsum
