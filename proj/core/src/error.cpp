// Copyright 2026 The coarsekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coarsekit/error.hpp"

namespace coarsekit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kBallTooLarge:
      return "BallTooLarge";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kNotInKernel:
      return "NotInKernel";
    case ErrorCode::kNotDisjoint:
      return "NotDisjoint";
    case ErrorCode::kNotCovering:
      return "NotCovering";
    case ErrorCode::kNotCoveringAfterShrink:
      return "NotCoveringAfterShrink";
    case ErrorCode::kDegenerateDenominator:
      return "DegenerateDenominator";
    case ErrorCode::kPreconditionFailed:
      return "PreconditionFailed";
    case ErrorCode::kWindowTooSmall:
      return "WindowTooSmall";
    case ErrorCode::kNotIrreducible:
      return "NotIrreducible";
    case ErrorCode::kLebesgueTooSmall:
      return "LebesgueTooSmall";
    case ErrorCode::kSubsequenceUnavailable:
      return "SubsequenceUnavailable";
    case ErrorCode::kAuditFailed:
      return "AuditFailed";
    case ErrorCode::kInfeasible:
      return "Infeasible";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBallTooLarge:
    case ErrorCode::kTooLarge:
      return 3;
    default:
      return 2;
  }
}

Error::Error(ErrorCode code, const std::string& message, std::string witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace coarsekit
