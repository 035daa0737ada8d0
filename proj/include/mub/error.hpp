#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mub {

enum class ErrorCode {
  DimError,
  InvalidSubspace,
  NotHermitian,
  NotCommuting,
  DegenerateFamily,
  InvalidField,
  ZeroInverse,
  FieldMismatch,
  NotUnitary,
  InvalidMap,
  HypothesisFailed,
  NotFullOnb,
  InvalidMasa,
  WrongCount,
  NotMub,
  NotPrimePower,
  Unsupported,
  ParseError,
  ValidationError,
  NumericalFailure,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this one type; callers switch on
// code() when they need to distinguish (the CLI maps codes to exit statuses).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mub
