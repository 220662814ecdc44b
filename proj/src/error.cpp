#include "sgcm/error.hpp"

namespace sgcm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveAB: return "NonPositiveAB";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ClassNotInSubgroup: return "ClassNotInSubgroup";
    case ErrorCode::TrivialSubgroup: return "TrivialSubgroup";
    case ErrorCode::ZeroGeneratorPair: return "ZeroGeneratorPair";
    case ErrorCode::InvalidDN: return "InvalidDN";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::Disagreement: return "Disagreement";
    case ErrorCode::NotFourGen: return "NotFourGen";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace sgcm
