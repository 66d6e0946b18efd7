#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaussmap {

// Error names are part of the machine-readable interface; keep them stable.
enum class ErrorCode {
  DuplicateBranchPoint,
  FirstBranchPointNotZero,
  TooFewBranchPoints,
  OddBranchPointCount,
  IndexOutOfRange,
  NotInPreviousKernel,
  NotInKernel,
  BeyondThreshold,
  ThresholdNotExtended,
  NoWitnessFound,
  InvalidIndex,
  ZeroDirection,
  SeriesTruncated,
  UndeterminedValuation,
  ParseError,
  DivisionByZero,
  InternalInconsistency,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace gaussmap
