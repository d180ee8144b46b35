#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace witt {

// Exit-status classes used by the command-line tool.
enum class ErrorClass {
  Parse = 1,
  Validation = 2,
  Precondition = 3,
  Internal = 4,
};

enum class ErrorCode {
  // parsing / validation
  ParseError,
  ValidationError,
  // mathematical preconditions
  UnassignedVariable,
  DivisionByZero,
  FieldMismatch,
  ZeroOperand,
  NotAPthPower,
  PrecisionRequired,
  PrecisionPresent,
  NoRootFound,
  ShapeMismatch,
  CutOutOfRange,
  NegativeValuation,
  NotTotallyRamifiedProfile,
  NotIncreasing,
  NonIntegralBreak,
  NotReduced,
  DegenerateCharacter,
  OutOfRange,
  UnsupportedDepth,
  ExtensionTooLarge,
  ZeroElement,
  // internal invariant violations
  InexactDivision,
  IdentityViolation,
  NotTotallyRamified,
  NonUniqueMinimum,
  NoCancellingCoefficient,
  NonIncreasingBreaks,
  CertificateFailure,
  NonTermination,
  OracleMismatch,
};

std::string_view error_code_name(ErrorCode code) noexcept;
ErrorClass error_class(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorClass error_class() const noexcept { return witt::error_class(code_); }
  int exit_status() const noexcept { return static_cast<int>(error_class()); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace witt
