// Copyright 2026 The robustflow Authors
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

#ifndef ROBUSTFLOW_ERRORS_H_
#define ROBUSTFLOW_ERRORS_H_

#include <stdexcept>
#include <string>

namespace robustflow {

enum class ErrorCode {
  // Bad parameters, malformed input, or an instance outside a family's domain.
  kInvalidArgument,
  // A path or scenario enumeration would exceed its configured cap.
  kGuardExceeded,
  // A structural violation that the caller asked to be treated as fatal.
  kInfeasible,
  // A postcondition failed. Always a bug.
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void ThrowInvalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

[[noreturn]] inline void ThrowInternal(const std::string& message) {
  throw Error(ErrorCode::kInternal, message);
}

}  // namespace robustflow

#endif  // ROBUSTFLOW_ERRORS_H_
