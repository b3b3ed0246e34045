#pragma once

#include <stdexcept>
#include <string>

namespace mmr {

enum class ErrorCode {
  kNonSquareOrIndivisible,
  kIndivisibleDimensions,
  kInvalidSigma,
  kInvalidConfig,
  kDimensionMismatch,
  kOddDimensions,
  kUnknownFamily,
  kZeroEnergyPlane,
  kUnsupportedGeometry,
  kIo,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mmr
