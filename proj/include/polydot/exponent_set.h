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

#ifndef POLYDOT_EXPONENT_SET_H_
#define POLYDOT_EXPONENT_SET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace polydot {

using Exponent = std::uint64_t;

// Sorted, duplicate-free set of polynomial exponents.
class ExponentSet {
 public:
  ExponentSet() = default;
  ExponentSet(std::initializer_list<Exponent> exps);
  explicit ExponentSet(std::vector<Exponent> exps);

  // {first, ..., first + count - 1}
  static ExponentSet Range(Exponent first, std::size_t count);

  std::size_t size() const { return exps_.size(); }
  bool empty() const { return exps_.empty(); }
  bool contains(Exponent e) const;
  // Position of e in sorted order, if present.
  std::optional<std::size_t> IndexOf(Exponent e) const;
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent max() const { return exps_.back(); }

  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }
  const std::vector<Exponent>& values() const { return exps_; }

  ExponentSet Union(const ExponentSet& other) const;
  ExponentSet Intersect(const ExponentSet& other) const;

  friend bool operator==(const ExponentSet&, const ExponentSet&) = default;

 private:
  std::vector<Exponent> exps_;
};

// {a + b : a in lhs, b in rhs}
ExponentSet Sumset(const ExponentSet& lhs, const ExponentSet& rhs);

std::ostream& operator<<(std::ostream& os, const ExponentSet& set);

}  // namespace polydot

#endif  // POLYDOT_EXPONENT_SET_H_
