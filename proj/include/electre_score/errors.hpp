#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace electre_score {

enum class ErrorCode {
  InvalidArgument,
  AllZeroWeights,
  NegativeThreshold,
  InvertedThresholds,
  DegenerateInterval,
  InvalidVeto,
  NoLowerBound,
  NoUpperBound,
  BasicAssumptionViolated,
  InvalidEdit,
  HypothesisNotMet,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes failure kinds.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace electre_score
