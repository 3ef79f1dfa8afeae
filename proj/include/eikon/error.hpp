#pragma once

#include <stdexcept>
#include <string>

namespace eikon {

enum class ErrorCode {
  kInvalidSpec,
  kDimensionMismatch,
  kTruncationExceeded,
  kNotOnBoundary,
  kNotC1,
  kStartNotInDomain,
  kStartOnMedialAxis,
  kTooFewSamples,
  kEmptyBand,
  kLevelOutOfRange,
  kInvalidTube,
  kScaleUnderflow,
  kNotC1InNeighborhood,
  kMedialInBall,
  kPreconditionViolated,
};

const char* to_string(ErrorCode code);

// Single exception type for every contract violation in the library; the
// code identifies which precondition failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eikon
