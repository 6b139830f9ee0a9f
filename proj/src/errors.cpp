#include "rlp/errors.hpp"

namespace rlp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonAscendingSpectrum: return "NonAscendingSpectrum";
    case ErrorCode::NonPositiveKappa: return "NonPositiveKappa";
    case ErrorCode::DegenerateGap: return "DegenerateGap";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::OverflowShift: return "OverflowShift";
    case ErrorCode::OverflowRange: return "OverflowRange";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPositiveN: return "NonPositiveN";
    case ErrorCode::NoBoundStates: return "NoBoundStates";
    case ErrorCode::RootBracketFailure: return "RootBracketFailure";
    case ErrorCode::NonUniformGrid: return "NonUniformGrid";
    case ErrorCode::StateCountMismatch: return "StateCountMismatch";
    case ErrorCode::InsufficientDecay: return "InsufficientDecay";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace rlp
