#include "gaussmap/error.hpp"

namespace gaussmap {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateBranchPoint: return "DuplicateBranchPoint";
    case ErrorCode::FirstBranchPointNotZero: return "FirstBranchPointNotZero";
    case ErrorCode::TooFewBranchPoints: return "TooFewBranchPoints";
    case ErrorCode::OddBranchPointCount: return "OddBranchPointCount";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotInPreviousKernel: return "NotInPreviousKernel";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::BeyondThreshold: return "BeyondThreshold";
    case ErrorCode::ThresholdNotExtended: return "ThresholdNotExtended";
    case ErrorCode::NoWitnessFound: return "NoWitnessFound";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::SeriesTruncated: return "SeriesTruncated";
    case ErrorCode::UndeterminedValuation: return "UndeterminedValuation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace gaussmap
