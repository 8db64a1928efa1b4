#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsalg {

enum class ErrorCode {
  MalformedMonomial,
  ArityMismatch,
  UnknownCategory,
  UnboundOpSymbol,
  ArityOutOfRange,
  UnsupportedScheme,
  NotAnticommutative,
  MissingProduct,
  MissingModuleProduct,
  DimensionMismatch,
  NotEndomorphism,
  NotNijenhuis,
  NotRelativeRB,
  KindMismatch,
  InvalidCocycle,
  NotTwistedRB,
  GraphNotClosed,
  NotNSAlgebra,
  HypothesisFailed,
  LengthOutOfRange,
  DivisionByZero,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace nsalg
