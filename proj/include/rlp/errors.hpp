#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rlp {

enum class ErrorCode {
  NonAscendingSpectrum,
  NonPositiveKappa,
  DegenerateGap,
  LengthMismatch,
  InvalidParameter,
  OverflowShift,
  OverflowRange,
  SizeLimit,
  NotSquare,
  EmptyGrid,
  IndexOutOfRange,
  NonPositiveN,
  NoBoundStates,
  RootBracketFailure,
  NonUniformGrid,
  StateCountMismatch,
  InsufficientDecay,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every library failure is reported through this type; `code()` is the
// machine-readable part surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rlp
