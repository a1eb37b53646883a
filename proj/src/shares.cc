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

#include "polydot/shares.h"

#include <string>
#include <utility>
#include <vector>

#include "polydot/error.h"
#include "polydot/powersets.h"
#include "polydot/rng.h"

namespace polydot {
namespace {

ExponentSet KeysOf(const SharePolynomial::Terms& terms) {
  std::vector<Exponent> keys;
  keys.reserve(terms.size());
  for (const auto& [e, m] : terms) keys.push_back(e);
  return ExponentSet(std::move(keys));
}

SharePolynomial::Terms DrawMasks(const PrimeField& f, const ExponentSet& exps,
                                 std::size_t rows, std::size_t cols,
                                 CounterRng& rng, ShareOptions options) {
  SharePolynomial::Terms secret;
  for (Exponent e : exps) secret.emplace(e, rng.UniformMatrix(f, rows, cols));
  if (options.reuse_first_mask && secret.size() >= 2) {
    std::prev(secret.end())->second = secret.begin()->second;
  }
  return secret;
}

}  // namespace

SharePolynomial::SharePolynomial(std::size_t rows, std::size_t cols,
                                 Terms coded, Terms secret)
    : rows_(rows), cols_(cols), coded_(std::move(coded)), secret_(std::move(secret)) {
  for (const Terms* terms : {&coded_, &secret_}) {
    for (const auto& [e, m] : *terms) {
      if (m.rows() != rows_ || m.cols() != cols_) {
        throw Error(ErrorCode::kShapeMismatch,
                    "coefficient of x^" + std::to_string(e) + " has shape " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
      }
    }
  }
  coded_support_ = KeysOf(coded_);
  secret_support_ = KeysOf(secret_);
  if (!coded_support_.Intersect(secret_support_).empty()) {
    throw Error(ErrorCode::kInvalidParams, "coded and secret supports overlap");
  }
  support_ = coded_support_.Union(secret_support_);
}

const FieldMatrix& SharePolynomial::coefficient(Exponent e) const {
  if (auto it = coded_.find(e); it != coded_.end()) return it->second;
  if (auto it = secret_.find(e); it != secret_.end()) return it->second;
  throw Error(ErrorCode::kTargetNotInSupport,
              "x^" + std::to_string(e) + " not in share support");
}

FieldMatrix SharePolynomial::Evaluate(const PrimeField& f,
                                      FieldElement x) const {
  FieldMatrix acc(rows_, cols_);
  for (const Terms* terms : {&coded_, &secret_}) {
    for (const auto& [e, m] : *terms) MatAxpy(f, f.Pow(x, e), m, acc);
  }
  return acc;
}

SharePolynomial BuildFA(const PrimeField& f, const BlockMatrix& a_transposed,
                        const SchemeParams& params, std::uint64_t seed,
                        ShareOptions options) {
  const auto t = static_cast<std::size_t>(params.t());
  const auto s = static_cast<std::size_t>(params.s());
  if (a_transposed.rows_blocks() != t || a_transposed.cols_blocks() != s) {
    throw Error(ErrorCode::kShapeMismatch,
                "F_A expects a t x s block grid of A^T");
  }
  const std::size_t rows = a_transposed.block_rows();
  const std::size_t cols = a_transposed.block_cols();
  SharePolynomial::Terms coded;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      coded.emplace(CodedExponentA(params, static_cast<std::int64_t>(i),
                                   static_cast<std::int64_t>(j)),
                    a_transposed.block(i, j));
    }
  }
  CounterRng rng(seed, "A");
  return SharePolynomial(
      rows, cols, std::move(coded),
      DrawMasks(f, SecretPowersA(params), rows, cols, rng, options));
}

SharePolynomial BuildFB(const PrimeField& f, const BlockMatrix& b,
                        const SchemeParams& params, std::uint64_t seed,
                        ShareOptions options) {
  const auto t = static_cast<std::size_t>(params.t());
  const auto s = static_cast<std::size_t>(params.s());
  if (b.rows_blocks() != s || b.cols_blocks() != t) {
    throw Error(ErrorCode::kShapeMismatch, "F_B expects an s x t block grid of B");
  }
  const std::size_t rows = b.block_rows();
  const std::size_t cols = b.block_cols();
  SharePolynomial::Terms coded;
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t l = 0; l < t; ++l) {
      coded.emplace(CodedExponentB(params, static_cast<std::int64_t>(k),
                                   static_cast<std::int64_t>(l)),
                    b.block(k, l));
    }
  }
  CounterRng rng(seed, "B");
  return SharePolynomial(
      rows, cols, std::move(coded),
      DrawMasks(f, SecretPowersB(params), rows, cols, rng, options));
}

SharePolynomial::Terms MultiplyTerms(const PrimeField& f,
                                     const SharePolynomial& lhs,
                                     const SharePolynomial& rhs) {
  SharePolynomial::Terms out;
  for (Exponent a : lhs.support()) {
    for (Exponent b : rhs.support()) {
      FieldMatrix prod = MatMul(f, lhs.coefficient(a), rhs.coefficient(b));
      auto [it, inserted] = out.try_emplace(a + b, prod);
      if (!inserted) it->second = MatAdd(f, it->second, prod);
    }
  }
  return out;
}

}  // namespace polydot
