#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace severi {

enum class ErrorCode {
  // exact series
  ZeroConstantTerm,
  NonzeroConstantTerm,
  ConstantTermNotOne,
  PositiveValuationRequired,
  NotReversible,
  // tangency / recursion
  InvalidState,
  CacheCorruption,
  IoError,
  VersionMismatch,
  ParseError,
  // node polynomials
  DegreeCheckFailed,
  NotQuadratic,
  // generating-function pipeline
  DegreeTooSmall,
  InconsistentSystem,
  NonIntegralPrediction,
  InvalidInvariants,
  // front end
  InvalidArgument,
  UnsupportedFormat,
};

std::string_view error_name(ErrorCode code) noexcept;

/// True for codes that signal a broken computation rather than bad input.
bool is_internal_inconsistency(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace severi
