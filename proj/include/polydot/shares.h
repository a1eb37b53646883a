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

#ifndef POLYDOT_SHARES_H_
#define POLYDOT_SHARES_H_

#include <cstdint>
#include <map>

#include "polydot/block_matrix.h"
#include "polydot/exponent_set.h"
#include "polydot/field.h"
#include "polydot/scheme_params.h"

namespace polydot {

// Sparse polynomial with matrix coefficients, split into a coded part
// (carrying data) and a secret part (carrying uniform random masks).
class SharePolynomial {
 public:
  using Terms = std::map<Exponent, FieldMatrix>;

  SharePolynomial() = default;
  // Throws kShapeMismatch on a coefficient of the wrong shape and
  // kInvalidParams if the two supports overlap.
  SharePolynomial(std::size_t rows, std::size_t cols, Terms coded,
                  Terms secret);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ExponentSet& support() const { return support_; }
  const ExponentSet& coded_support() const { return coded_support_; }
  const ExponentSet& secret_support() const { return secret_support_; }
  const Terms& coded_terms() const { return coded_; }
  const Terms& secret_terms() const { return secret_; }
  // Throws kTargetNotInSupport.
  const FieldMatrix& coefficient(Exponent e) const;

  FieldMatrix Evaluate(const PrimeField& f, FieldElement x) const;

  friend bool operator==(const SharePolynomial&,
                         const SharePolynomial&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Terms coded_;
  Terms secret_;
  ExponentSet support_;
  ExponentSet coded_support_;
  ExponentSet secret_support_;
};

struct ShareOptions {
  // Test hook: place the first random mask again at the last secret exponent,
  // leaving only z-1 independent masks.
  bool reuse_first_mask = false;
};

// Source 1. `a_transposed` is the t x s grid of A^T with (m/t) x (m/s) blocks;
// block (i, j) goes to exponent i + tj and z masks from stream (seed, "A")
// fill the secret exponents.
SharePolynomial BuildFA(const PrimeField& f, const BlockMatrix& a_transposed,
                        const SchemeParams& params, std::uint64_t seed,
                        ShareOptions options = {});

// Source 2. `b` is the s x t grid of B with (m/s) x (m/t) blocks; block (k, l)
// goes to exponent t(s-1-k) + theta*l, masks from stream (seed, "B").
SharePolynomial BuildFB(const PrimeField& f, const BlockMatrix& b,
                        const SchemeParams& params, std::uint64_t seed,
                        ShareOptions options = {});

// Full product of two share polynomials, term by term. Test and audit aid;
// workers only ever see evaluations.
SharePolynomial::Terms MultiplyTerms(const PrimeField& f,
                                     const SharePolynomial& lhs,
                                     const SharePolynomial& rhs);

}  // namespace polydot

#endif  // POLYDOT_SHARES_H_
