// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

enum class ErrorCode {
  InvalidArgument,
  Domain,
  DegenerateSample,
  Infeasible,
  NonConvergence,
  Normalization,
  Parse,
  NonMonotoneDate,
  Io,
  OrderingViolation,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orlicz
