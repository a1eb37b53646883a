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

#ifndef POLYDOT_RNG_H_
#define POLYDOT_RNG_H_

#include <cstdint>
#include <string_view>

#include "polydot/field.h"

namespace polydot {

// Counter-based stream: output i is SplitMix64 finalization of
// key + (i+1) * golden_gamma, where key mixes (seed, role, index). Streams
// for different roles or indices are independent of each other and of the
// order in which parties run.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::string_view role, std::uint64_t index = 0);

  std::uint64_t Next();
  // Uniform in [0, q) by rejection on the top bits.
  FieldElement UniformElement(const PrimeField& f);
  // Uniform in [1, q).
  FieldElement UniformNonzero(const PrimeField& f);
  FieldMatrix UniformMatrix(const PrimeField& f, std::size_t rows,
                            std::size_t cols);
  // Uniform in [0, bound).
  std::uint64_t UniformBelow(std::uint64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace polydot

#endif  // POLYDOT_RNG_H_
