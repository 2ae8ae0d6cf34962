#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subres {

enum class ErrorCode {
  NonSquareMatrix,
  UnknownColumnLabel,
  ColumnMismatch,
  ShapeMismatch,
  SingularMatrix,
  ArityMismatch,
  WrongCardinality,
  DegreeTooHigh,
  DuplicateMonomial,
  InvalidSelection,
  IndexOutOfRange,
  BadOrderRange,
  NotHomogeneous,
  SingularVandermonde,
  ExtraneousFactorVanishes,
  ZeroLeadingCoefficient,
  DuplicateAxisValue,
  SingularTransform,
  TooLarge,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can name the offending condition in its JSON payload.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace subres
