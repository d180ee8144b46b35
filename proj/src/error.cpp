#include "witt/error.hpp"

namespace witt {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnassignedVariable: return "UnassignedVariable";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroOperand: return "ZeroOperand";
    case ErrorCode::NotAPthPower: return "NotAPthPower";
    case ErrorCode::PrecisionRequired: return "PrecisionRequired";
    case ErrorCode::PrecisionPresent: return "PrecisionPresent";
    case ErrorCode::NoRootFound: return "NoRootFound";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::CutOutOfRange: return "CutOutOfRange";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::NotTotallyRamifiedProfile: return "NotTotallyRamifiedProfile";
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::NonIntegralBreak: return "NonIntegralBreak";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::DegenerateCharacter: return "DegenerateCharacter";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnsupportedDepth: return "UnsupportedDepth";
    case ErrorCode::ExtensionTooLarge: return "ExtensionTooLarge";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::NotTotallyRamified: return "NotTotallyRamified";
    case ErrorCode::NonUniqueMinimum: return "NonUniqueMinimum";
    case ErrorCode::NoCancellingCoefficient: return "NoCancellingCoefficient";
    case ErrorCode::NonIncreasingBreaks: return "NonIncreasingBreaks";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
  }
  return "UnknownError";
}

ErrorClass error_class(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
      return ErrorClass::Parse;
    case ErrorCode::ValidationError:
      return ErrorClass::Validation;
    case ErrorCode::InexactDivision:
    case ErrorCode::IdentityViolation:
    case ErrorCode::NotTotallyRamified:
    case ErrorCode::NonUniqueMinimum:
    case ErrorCode::NoCancellingCoefficient:
    case ErrorCode::NonIncreasingBreaks:
    case ErrorCode::CertificateFailure:
    case ErrorCode::NonTermination:
    case ErrorCode::OracleMismatch:
      return ErrorClass::Internal;
    default:
      return ErrorClass::Precondition;
  }
}

}  // namespace witt
