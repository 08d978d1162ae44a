#include "pseudomarket/errors.hpp"

namespace pseudomarket {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroRow: return "ZeroRow";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::NegativeUtility: return "NegativeUtility";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MassMismatch: return "MassMismatch";
    case ErrorCode::NegativeResult: return "NegativeResult";
    case ErrorCode::NotDoublyStochastic: return "NotDoublyStochastic";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotDichotomous: return "NotDichotomous";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::EmptyMarket: return "EmptyMarket";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroUtilityAgent: return "ZeroUtilityAgent";
    case ErrorCode::CertificateInvalid: return "CertificateInvalid";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::RuleUnavailable: return "RuleUnavailable";
    case ErrorCode::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroRow:
    case ErrorCode::ZeroColumn:
    case ErrorCode::NegativeUtility:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::MassMismatch:
    case ErrorCode::NegativeResult:
    case ErrorCode::NotDoublyStochastic:
    case ErrorCode::ParseError:
      return true;
    default:
      return false;
  }
}

}  // namespace pseudomarket
