#include "skewbrace/error.hpp"

namespace skewbrace {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::BraceRelationFails: return "BraceRelationFails";
    case ErrorCode::IdentityMismatch: return "IdentityMismatch";
    case ErrorCode::NotRadical: return "NotRadical";
    case ErrorCode::NotARing: return "NotARing";
    case ErrorCode::NotALeftIdeal: return "NotALeftIdeal";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::QuotientTooLarge: return "QuotientTooLarge";
    case ErrorCode::TooLargeForIdealEnumeration: return "TooLargeForIdealEnumeration";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonCommutingFamily: return "NonCommutingFamily";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::vector<Elem> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      witness_(std::move(witness)) {}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::MalformedTable:
      return 1;
    case ErrorCode::TooLarge:
    case ErrorCode::QuotientTooLarge:
    case ErrorCode::TooLargeForIdealEnumeration:
      return 3;
    default:
      return 2;
  }
}

}  // namespace skewbrace
