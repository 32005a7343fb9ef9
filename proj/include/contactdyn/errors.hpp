#pragma once

#include <stdexcept>
#include <string>

namespace contactdyn {

enum class ErrorCode {
  NonPositiveLambda,
  NonFinite,
  DimensionMismatch,
  StepSingular,
  EmptyTrajectory,
  LengthMismatch,
  TooShort,
  NoCrossings,
  OverdampedUnsupported,
  InsufficientData,
  InvalidSpec,
  UnsupportedModel,
  ConfigError,
};

const char* to_string(ErrorCode code);

/// Library-wide error type carrying a machine-readable code.
class ContactError : public std::runtime_error {
 public:
  ContactError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace contactdyn
