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

#include "polydot/exponent_set.h"

#include <algorithm>
#include <iterator>

namespace polydot {

ExponentSet::ExponentSet(std::initializer_list<Exponent> exps)
    : ExponentSet(std::vector<Exponent>(exps)) {}

ExponentSet::ExponentSet(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  std::sort(exps_.begin(), exps_.end());
  exps_.erase(std::unique(exps_.begin(), exps_.end()), exps_.end());
}

ExponentSet ExponentSet::Range(Exponent first, std::size_t count) {
  ExponentSet out;
  out.exps_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.exps_.push_back(first + i);
  return out;
}

bool ExponentSet::contains(Exponent e) const {
  return std::binary_search(exps_.begin(), exps_.end(), e);
}

std::optional<std::size_t> ExponentSet::IndexOf(Exponent e) const {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), e);
  if (it == exps_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - exps_.begin());
}

ExponentSet ExponentSet::Union(const ExponentSet& other) const {
  ExponentSet out;
  std::set_union(exps_.begin(), exps_.end(), other.exps_.begin(),
                 other.exps_.end(), std::back_inserter(out.exps_));
  return out;
}

ExponentSet ExponentSet::Intersect(const ExponentSet& other) const {
  ExponentSet out;
  std::set_intersection(exps_.begin(), exps_.end(), other.exps_.begin(),
                        other.exps_.end(), std::back_inserter(out.exps_));
  return out;
}

ExponentSet Sumset(const ExponentSet& lhs, const ExponentSet& rhs) {
  if (lhs.empty() || rhs.empty()) return {};
  // Dense bitmap over [0, max_l + max_r]; supports stay at desk scale.
  std::vector<bool> hit(lhs.max() + rhs.max() + 1, false);
  for (Exponent a : lhs) {
    for (Exponent b : rhs) hit[a + b] = true;
  }
  std::vector<Exponent> out;
  for (std::size_t e = 0; e < hit.size(); ++e) {
    if (hit[e]) out.push_back(e);
  }
  return ExponentSet(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const ExponentSet& set) {
  os << '{';
  bool first = true;
  for (Exponent e : set) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os << '}';
}

}  // namespace polydot
