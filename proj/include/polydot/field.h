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

// Exact arithmetic over GF(q) for a runtime prime q < 2^63, dense field
// matrices, and generalized Vandermonde solving on sparse exponent supports.

#ifndef POLYDOT_FIELD_H_
#define POLYDOT_FIELD_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polydot/exponent_set.h"

namespace polydot {

// Canonical representative in [0, q). Only PrimeField produces these, so the
// invariant value < q holds for every element that reaches arithmetic.
struct FieldElement {
  std::uint64_t value = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool IsPrime(std::uint64_t n);

class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultModulus = (std::uint64_t{1} << 61) - 1;

  // Throws kNotPrime unless q is a prime below 2^63.
  explicit PrimeField(std::uint64_t q = kDefaultModulus);

  std::uint64_t modulus() const { return q_; }

  // Reduces an arbitrary integer into the field.
  FieldElement Reduce(std::uint64_t v) const { return {v % q_}; }
  // Accepts only canonical values; throws kParse otherwise.
  FieldElement FromCanonical(std::uint64_t v) const;

  FieldElement Add(FieldElement a, FieldElement b) const {
    std::uint64_t r = a.value + b.value;
    return {r >= q_ ? r - q_ : r};
  }
  FieldElement Sub(FieldElement a, FieldElement b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
  }
  FieldElement Neg(FieldElement a) const {
    return {a.value == 0 ? 0 : q_ - a.value};
  }
  FieldElement Mul(FieldElement a, FieldElement b) const {
    return {static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a.value) * b.value) % q_)};
  }
  FieldElement Pow(FieldElement base, std::uint64_t exponent) const;
  // Throws kZeroInverse for a == 0.
  FieldElement Inv(FieldElement a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.q_ == b.q_;
  }

 private:
  std::uint64_t q_;
};

// Dense row-major matrix over the field. Also serves as a single block of a
// BlockMatrix.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static FieldMatrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const FieldElement& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const FieldElement> data() const { return data_; }
  std::span<FieldElement> data() { return data_; }

  bool IsZero() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

FieldMatrix MatMul(const PrimeField& f, const FieldMatrix& x,
                   const FieldMatrix& y);
FieldMatrix MatAdd(const PrimeField& f, const FieldMatrix& x,
                   const FieldMatrix& y);
FieldMatrix MatScale(const PrimeField& f, FieldElement c,
                     const FieldMatrix& x);
// acc += c * x
void MatAxpy(const PrimeField& f, FieldElement c, const FieldMatrix& x,
             FieldMatrix& acc);
FieldMatrix Transpose(const FieldMatrix& x);

// Gauss-Jordan with first-nonzero pivoting. Throws kSingularMatrix.
FieldMatrix Inverse(const PrimeField& f, const FieldMatrix& a);
// Solves a * x = b for square a. Throws kSingularMatrix.
std::vector<FieldElement> Solve(const PrimeField& f, const FieldMatrix& a,
                                std::span<const FieldElement> b);
std::size_t Rank(const PrimeField& f, FieldMatrix a);

// Alpha values, one per worker: pairwise distinct and nonzero.
class EvaluationPoints {
 public:
  EvaluationPoints() = default;
  // Throws kInvalidPoints on a zero or repeated entry.
  explicit EvaluationPoints(std::vector<FieldElement> alphas);

  std::size_t size() const { return alphas_.size(); }
  FieldElement operator[](std::size_t n) const { return alphas_[n]; }
  std::span<const FieldElement> values() const { return alphas_; }
  // First k points, as a new point set.
  EvaluationPoints Prefix(std::size_t k) const;

  friend bool operator==(const EvaluationPoints&,
                         const EvaluationPoints&) = default;

 private:
  std::vector<FieldElement> alphas_;
};

// Sum_k coeffs[k] * x^support[k].
FieldElement EvalSparse(const PrimeField& f, const ExponentSet& support,
                        std::span<const FieldElement> coeffs, FieldElement x);

// V[n][k] = alpha_n^support[k].
FieldMatrix GeneralizedVandermonde(const PrimeField& f,
                                   std::span<const FieldElement> points,
                                   const ExponentSet& support);

// Coefficients c with sum_k c[k] alpha_n^support[k] = values[n] for every n.
std::vector<FieldElement> VandermondeSolve(const PrimeField& f,
                                           const EvaluationPoints& points,
                                           const ExponentSet& support,
                                           std::span<const FieldElement> values);

// Row of V^{-1} for `target`: sum_n r[n] P(alpha_n) recovers the coefficient
// of x^target of any P supported on `support`.
std::vector<FieldElement> ExtractionVector(const PrimeField& f,
                                           const EvaluationPoints& points,
                                           const ExponentSet& support,
                                           Exponent target);

}  // namespace polydot

#endif  // POLYDOT_FIELD_H_
