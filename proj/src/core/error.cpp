#include "alegeo/core/error.hpp"

namespace alegeo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::SingularMetric: return "SingularMetric";
    case ErrorCode::NotEinstein: return "NotEinstein";
    case ErrorCode::NotWeyl: return "NotWeyl";
    case ErrorCode::PositiveEinsteinConstant: return "PositiveEinsteinConstant";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::ScheduleTooShort: return "ScheduleTooShort";
    case ErrorCode::FitIllConditioned: return "FitIllConditioned";
    case ErrorCode::NonDecayingInput: return "NonDecayingInput";
    case ErrorCode::OdeFailure: return "OdeFailure";
    case ErrorCode::InnerBoundaryIllPosed: return "InnerBoundaryIllPosed";
    case ErrorCode::ExpansionFitFailure: return "ExpansionFitFailure";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidDimension:
    case ErrorCode::InvalidParameter:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::GroupMismatch:
    case ErrorCode::OutOfDomain:
    case ErrorCode::SingularMetric:
    case ErrorCode::NotEinstein:
    case ErrorCode::NotWeyl:
    case ErrorCode::PositiveEinsteinConstant:
      return true;
    default:
      return false;
  }
}

}  // namespace alegeo
