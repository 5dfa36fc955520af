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

#ifndef COARSEKIT_ERROR_HPP_
#define COARSEKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace coarsekit {

enum class ErrorCode {
  kInvalidArgument,
  kBallTooLarge,
  kTooLarge,
  kNotInKernel,
  kNotDisjoint,
  kNotCovering,
  kNotCoveringAfterShrink,
  kDegenerateDenominator,
  kPreconditionFailed,
  kWindowTooSmall,
  kNotIrreducible,
  kLebesgueTooSmall,
  kSubsequenceUnavailable,
  kAuditFailed,
  kInfeasible,
};

std::string_view to_string(ErrorCode code);

// Process exit status for a failure of this kind: 3 for resource caps,
// 2 for precondition and audit failures.
int exit_status(ErrorCode code);

// Every failure raised by the library. The witness is a short
// machine-readable description of the offending object (a pair of points,
// a radius reached, a violated inequality) and may be empty.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace coarsekit

#endif  // COARSEKIT_ERROR_HPP_
