/*
 * Copyright 2026 The polydot-cmpc Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef POLYDOT_ERROR_H_
#define POLYDOT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace polydot {

enum class ErrorCode {
  kNotPrime,
  kZeroInverse,
  kLengthMismatch,
  kSingularMatrix,
  kTargetNotInSupport,
  kInvalidPoints,
  kIndivisibleDimensions,
  kDimensionMismatch,
  kShapeMismatch,
  kInvalidParams,
  kRegionDispatch,
  kInvalidConfig,
  kSetupExhausted,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polydot

#endif  // POLYDOT_ERROR_H_
