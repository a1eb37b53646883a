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

#ifndef POLYDOT_SCHEME_PARAMS_H_
#define POLYDOT_SCHEME_PARAMS_H_

#include <cstdint>
#include <optional>
#include <ostream>

namespace polydot {

// (s, t, z) plus the derived scalars every construction refers to.
//   theta = t(2s-1), the column stride of the coded B exponents
//   tau   = theta - ts - t
//   p     = min(floor((z-1)/(ts-t)), t-1), with p = t-1 when s = 1
//   p'    = min(floor((z-1)/(tau-z+1)), t-1), only for (tau+1)/2 < z <= tau
//   upsilon = max(ts-2t-s+2, (ts-2t+1)/2), kept doubled to stay integral
class SchemeParams {
 public:
  // Throws kInvalidParams unless s, t, z >= 1.
  static SchemeParams Create(std::int64_t s, std::int64_t t, std::int64_t z);

  std::int64_t s() const { return s_; }
  std::int64_t t() const { return t_; }
  std::int64_t z() const { return z_; }
  std::int64_t ts() const { return t_ * s_; }
  std::int64_t theta() const { return t_ * (2 * s_ - 1); }
  std::int64_t tau() const { return theta() - ts() - t_; }
  std::int64_t p() const;
  std::optional<std::int64_t> p_prime() const;
  std::int64_t upsilon_doubled() const;

  // Neither s nor t equals one; the generic branch of every case split.
  bool generic() const { return s_ != 1 && t_ != 1; }

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;

 private:
  SchemeParams(std::int64_t s, std::int64_t t, std::int64_t z)
      : s_(s), t_(t), z_(z) {}

  std::int64_t s_;
  std::int64_t t_;
  std::int64_t z_;
};

std::ostream& operator<<(std::ostream& os, const SchemeParams& params);

}  // namespace polydot

#endif  // POLYDOT_SCHEME_PARAMS_H_
