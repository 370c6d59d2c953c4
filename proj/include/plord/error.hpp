#pragma once

#include <stdexcept>
#include <string>

namespace plord {

enum class ErrorCode {
  ParseError,
  InvalidHomeo,
  InvalidBump,
  InvalidIntervals,
  InvalidPair,
  NotAPlusPart,
  PreconditionViolated,
  ConstructionFailed,
  NotJointlyPositivizable,
  Undecided,
  BallTooSmall,
  ResourceLimit,
};

std::string error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::string detail_json = "")
      : std::runtime_error(error_code_name(code) + ": " + message),
        code_(code),
        detail_(std::move(detail_json)) {}

  ErrorCode code() const { return code_; }
  // Optional machine-readable certificate (JSON text), e.g. the exact
  // symmetric difference that violated a precondition.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace plord
