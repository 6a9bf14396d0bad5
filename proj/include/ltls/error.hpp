#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ltls {

enum class ErrorCode {
  // gf
  NonPrime,
  DegreeZero,
  Overflow,
  FieldMismatch,
  DivisionByZero,
  ConstantPolynomial,
  // grp
  EnumerationCapExceeded,
  InvalidQ,
  NotEnumerated,
  PrimeDoesNotDivideOrder,
  DomainTooLarge,
  DomainMismatch,
  NotNormal,
  BNotTransitive,
  InvalidPermutation,
  // linspace
  DegenerateParams,
  InvalidSpace,
  NotAutomorphism,
  EmptyFixedSet,
  // construct
  NotCharacteristicTwo,
  TooSmall,
  // lemmas
  MissingField,
  InfeasibleParams,
  QTooLarge,
  // io
  Schema,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ltls
