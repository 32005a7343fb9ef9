#include "contactdyn/errors.hpp"

namespace contactdyn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveLambda:
      return "NonPositiveLambda";
    case ErrorCode::NonFinite:
      return "NonFinite";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::StepSingular:
      return "StepSingular";
    case ErrorCode::EmptyTrajectory:
      return "EmptyTrajectory";
    case ErrorCode::LengthMismatch:
      return "LengthMismatch";
    case ErrorCode::TooShort:
      return "TooShort";
    case ErrorCode::NoCrossings:
      return "NoCrossings";
    case ErrorCode::OverdampedUnsupported:
      return "OverdampedUnsupported";
    case ErrorCode::InsufficientData:
      return "InsufficientData";
    case ErrorCode::InvalidSpec:
      return "InvalidSpec";
    case ErrorCode::UnsupportedModel:
      return "UnsupportedModel";
    case ErrorCode::ConfigError:
      return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace contactdyn
