#include "severi/error.hpp"

namespace severi {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::PositiveValuationRequired: return "PositiveValuationRequired";
    case ErrorCode::NotReversible: return "NotReversible";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::CacheCorruption: return "CacheCorruption";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegreeCheckFailed: return "DegreeCheckFailed";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::NonIntegralPrediction: return "NonIntegralPrediction";
    case ErrorCode::InvalidInvariants: return "InvalidInvariants";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

bool is_internal_inconsistency(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CacheCorruption:
    case ErrorCode::DegreeCheckFailed:
    case ErrorCode::NotQuadratic:
    case ErrorCode::InconsistentSystem:
    case ErrorCode::NonIntegralPrediction:
      return true;
    default:
      return false;
  }
}

}  // namespace severi
