#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alegeo {

enum class ErrorCode {
  InvalidArgument,
  InvalidDimension,
  InvalidParameter,
  DimensionMismatch,
  GroupMismatch,
  OutOfDomain,
  SingularMetric,
  NotEinstein,
  NotWeyl,
  PositiveEinsteinConstant,
  QuadratureFailure,
  ScheduleTooShort,
  FitIllConditioned,
  NonDecayingInput,
  OdeFailure,
  InnerBoundaryIllPosed,
  ExpansionFitFailure,
  NoConvergence,
  GridTooCoarse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Input problems (bad parameters, hypotheses not met) as opposed to numerical
// non-convergence.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace alegeo
