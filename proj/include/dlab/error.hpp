#pragma once

#include <stdexcept>
#include <string>

namespace dlab {

/// Comparison tolerance shared by every geometric routine.
inline constexpr double kTol = 1e-9;

enum class ErrorCode {
  kOutOfDimension,
  kInvalidDescriptor,
  kSizeLimit,
  kNumerical,
  kEmptySlice,
  kNotPolyhedral,
  kNotInBall,
  kNegativeFirstCoordinate,
  kBadIndex,
  kNotOnSphere,
  kSearchExhausted,
  kParse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dlab
