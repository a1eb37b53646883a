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

#include "polydot/scheme_params.h"

#include <algorithm>
#include <string>

#include "polydot/error.h"

namespace polydot {

SchemeParams SchemeParams::Create(std::int64_t s, std::int64_t t,
                                  std::int64_t z) {
  if (s < 1) throw Error(ErrorCode::kInvalidParams, "s must be >= 1");
  if (t < 1) throw Error(ErrorCode::kInvalidParams, "t must be >= 1");
  if (z < 1) throw Error(ErrorCode::kInvalidParams, "z must be >= 1");
  return SchemeParams(s, t, z);
}

std::int64_t SchemeParams::p() const {
  const std::int64_t denom = ts() - t_;
  if (denom == 0) return t_ - 1;
  return std::min((z_ - 1) / denom, t_ - 1);
}

std::optional<std::int64_t> SchemeParams::p_prime() const {
  if (!generic() || 2 * z_ <= tau() + 1 || z_ > tau()) return std::nullopt;
  return std::min((z_ - 1) / (tau() - z_ + 1), t_ - 1);
}

std::int64_t SchemeParams::upsilon_doubled() const {
  return std::max(2 * (ts() - 2 * t_ - s_ + 2), ts() - 2 * t_ + 1);
}

std::ostream& operator<<(std::ostream& os, const SchemeParams& params) {
  return os << "(s=" << params.s() << ",t=" << params.t()
            << ",z=" << params.z() << ")";
}

}  // namespace polydot
