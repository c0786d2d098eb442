// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include "orlicz/error.hpp"

namespace orlicz {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Domain: return "domain violation";
    case ErrorCode::DegenerateSample: return "degenerate sample";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::NonConvergence: return "non-convergence";
    case ErrorCode::Normalization: return "normalization failure";
    case ErrorCode::Parse: return "malformed input";
    case ErrorCode::NonMonotoneDate: return "non-monotone date";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::OrderingViolation: return "ordering violation";
  }
  return "unknown";
}

}  // namespace orlicz
