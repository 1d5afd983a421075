#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planeproj {

enum class ErrorCode {
  kDegenerateInput,
  kTooLargeForExact,
  kBadPlane,
  kNotVerified,
  kTiedCoordinates,
  kConstructionFailed,
  kNotACaterpillar,
  kFailedHeuristic,
  kBadDecomposition,
  kBadPlanarInput,
  kBadLayer,
  kNotPlanar,
  kBadInput,
  kParseError,
};

/// Upper-snake name of an error code, e.g. "TOO_LARGE_FOR_EXACT".
std::string_view error_code_name(ErrorCode code);

/// Every precondition violation in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace planeproj
