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

#include "polydot/rng.h"

#include <bit>

namespace polydot {
namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t Mix(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a
std::uint64_t HashRole(std::string_view role) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : role) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::string_view role,
                       std::uint64_t index)
    : key_(Mix(Mix(seed) ^ Mix(HashRole(role) + kGamma) ^
               Mix(index + 2 * kGamma))) {}

std::uint64_t CounterRng::Next() { return Mix(key_ + (++counter_) * kGamma); }

std::uint64_t CounterRng::UniformBelow(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const int bits = std::bit_width(bound - 1);
  for (;;) {
    const std::uint64_t v = Next() >> (64 - bits);
    if (v < bound) return v;
  }
}

FieldElement CounterRng::UniformElement(const PrimeField& f) {
  return {UniformBelow(f.modulus())};
}

FieldElement CounterRng::UniformNonzero(const PrimeField& f) {
  return {1 + UniformBelow(f.modulus() - 1)};
}

FieldMatrix CounterRng::UniformMatrix(const PrimeField& f, std::size_t rows,
                                      std::size_t cols) {
  FieldMatrix m(rows, cols);
  for (FieldElement& e : m.data()) e = UniformElement(f);
  return m;
}

}  // namespace polydot
