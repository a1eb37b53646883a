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

#include "polydot/error.h"

namespace polydot {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kTargetNotInSupport: return "TargetNotInSupport";
    case ErrorCode::kInvalidPoints: return "InvalidPoints";
    case ErrorCode::kIndivisibleDimensions: return "IndivisibleDimensions";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kRegionDispatch: return "RegionDispatch";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kSetupExhausted: return "SetupExhausted";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace polydot
