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

#include "polydot/field.h"

#include <algorithm>
#include <string>
#include <utility>

#include "polydot/error.h"

namespace polydot {
namespace {

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = MulMod(r, b, m);
    b = MulMod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Row-reduces `a` in place (first-nonzero pivot). Returns the pivot columns.
std::vector<std::size_t> RowReduce(const PrimeField& f, FieldMatrix& a,
                                   FieldMatrix* companion) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).value == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
      if (companion != nullptr) {
        for (std::size_t c = 0; c < companion->cols(); ++c) {
          std::swap((*companion)(piv, c), (*companion)(row, c));
        }
      }
    }
    const FieldElement inv = f.Inv(a(row, col));
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = f.Mul(a(row, c), inv);
    if (companion != nullptr) {
      for (std::size_t c = 0; c < companion->cols(); ++c) {
        (*companion)(row, c) = f.Mul((*companion)(row, c), inv);
      }
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).value == 0) continue;
      const FieldElement factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) {
        a(r, c) = f.Sub(a(r, c), f.Mul(factor, a(row, c)));
      }
      if (companion != nullptr) {
        for (std::size_t c = 0; c < companion->cols(); ++c) {
          (*companion)(r, c) =
              f.Sub((*companion)(r, c), f.Mul(factor, (*companion)(row, c)));
        }
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are sufficient for every n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (q >= (std::uint64_t{1} << 63) || !IsPrime(q)) {
    throw Error(ErrorCode::kNotPrime,
                "modulus " + std::to_string(q) + " is not a prime below 2^63");
  }
}

FieldElement PrimeField::FromCanonical(std::uint64_t v) const {
  if (v >= q_) {
    throw Error(ErrorCode::kParse, "value " + std::to_string(v) +
                                       " is not below modulus " +
                                       std::to_string(q_));
  }
  return {v};
}

FieldElement PrimeField::Pow(FieldElement base, std::uint64_t exponent) const {
  return {PowMod(base.value, exponent, q_)};
}

FieldElement PrimeField::Inv(FieldElement a) const {
  if (a.value == 0) throw Error(ErrorCode::kZeroInverse, "inverse of zero");
  return Pow(a, q_ - 2);
}

FieldMatrix FieldMatrix::Identity(std::size_t n) {
  FieldMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = {1};
  return out;
}

bool FieldMatrix::IsZero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](FieldElement e) { return e.value == 0; });
}

FieldMatrix MatMul(const PrimeField& f, const FieldMatrix& x,
                   const FieldMatrix& y) {
  if (x.cols() != y.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "inner dimensions " + std::to_string(x.cols()) + " and " +
                    std::to_string(y.rows()) + " differ");
  }
  FieldMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const FieldElement a = x(i, k);
      if (a.value == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        out(i, j) = f.Add(out(i, j), f.Mul(a, y(k, j)));
      }
    }
  }
  return out;
}

FieldMatrix MatAdd(const PrimeField& f, const FieldMatrix& x,
                   const FieldMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix sum of unequal shapes");
  }
  FieldMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = f.Add(x.data()[i], y.data()[i]);
  }
  return out;
}

FieldMatrix MatScale(const PrimeField& f, FieldElement c,
                     const FieldMatrix& x) {
  FieldMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = f.Mul(c, x.data()[i]);
  }
  return out;
}

void MatAxpy(const PrimeField& f, FieldElement c, const FieldMatrix& x,
             FieldMatrix& acc) {
  if (x.rows() != acc.rows() || x.cols() != acc.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "axpy of unequal shapes");
  }
  if (c.value == 0) return;
  for (std::size_t i = 0; i < acc.data().size(); ++i) {
    acc.data()[i] = f.Add(acc.data()[i], f.Mul(c, x.data()[i]));
  }
}

FieldMatrix Transpose(const FieldMatrix& x) {
  FieldMatrix out(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out(j, i) = x(i, j);
  }
  return out;
}

FieldMatrix Inverse(const PrimeField& f, const FieldMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "inverse of non-square matrix");
  }
  FieldMatrix work = a;
  FieldMatrix inv = FieldMatrix::Identity(a.rows());
  if (RowReduce(f, work, &inv).size() != a.rows()) {
    throw Error(ErrorCode::kSingularMatrix,
                std::to_string(a.rows()) + "x" + std::to_string(a.rows()) +
                    " matrix is singular");
  }
  return inv;
}

std::vector<FieldElement> Solve(const PrimeField& f, const FieldMatrix& a,
                                std::span<const FieldElement> b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) {
    throw Error(ErrorCode::kLengthMismatch, "system is not square");
  }
  FieldMatrix work = a;
  FieldMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  if (RowReduce(f, work, &rhs).size() != a.rows()) {
    throw Error(ErrorCode::kSingularMatrix, "system matrix is singular");
  }
  std::vector<FieldElement> x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

std::size_t Rank(const PrimeField& f, FieldMatrix a) {
  return RowReduce(f, a, nullptr).size();
}

EvaluationPoints::EvaluationPoints(std::vector<FieldElement> alphas)
    : alphas_(std::move(alphas)) {
  std::vector<FieldElement> sorted = alphas_;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front().value == 0) {
    throw Error(ErrorCode::kInvalidPoints, "evaluation point zero");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidPoints, "repeated evaluation point");
  }
}

EvaluationPoints EvaluationPoints::Prefix(std::size_t k) const {
  return EvaluationPoints(std::vector<FieldElement>(
      alphas_.begin(), alphas_.begin() + static_cast<std::ptrdiff_t>(k)));
}

FieldElement EvalSparse(const PrimeField& f, const ExponentSet& support,
                        std::span<const FieldElement> coeffs, FieldElement x) {
  if (coeffs.size() != support.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(coeffs.size()) + " coefficients for support of " +
                    std::to_string(support.size()));
  }
  FieldElement acc{0};
  for (std::size_t k = 0; k < support.size(); ++k) {
    acc = f.Add(acc, f.Mul(coeffs[k], f.Pow(x, support[k])));
  }
  return acc;
}

FieldMatrix GeneralizedVandermonde(const PrimeField& f,
                                   std::span<const FieldElement> points,
                                   const ExponentSet& support) {
  FieldMatrix v(points.size(), support.size());
  for (std::size_t n = 0; n < points.size(); ++n) {
    for (std::size_t k = 0; k < support.size(); ++k) {
      v(n, k) = f.Pow(points[n], support[k]);
    }
  }
  return v;
}

std::vector<FieldElement> VandermondeSolve(const PrimeField& f,
                                           const EvaluationPoints& points,
                                           const ExponentSet& support,
                                           std::span<const FieldElement> values) {
  if (points.size() != support.size() || values.size() != support.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "need |points| = |support| = |values|");
  }
  return Solve(f, GeneralizedVandermonde(f, points.values(), support), values);
}

std::vector<FieldElement> ExtractionVector(const PrimeField& f,
                                           const EvaluationPoints& points,
                                           const ExponentSet& support,
                                           Exponent target) {
  const auto idx = support.IndexOf(target);
  if (!idx) {
    throw Error(ErrorCode::kTargetNotInSupport,
                "exponent " + std::to_string(target) + " not in support");
  }
  if (points.size() != support.size()) {
    throw Error(ErrorCode::kLengthMismatch, "need |points| = |support|");
  }
  // Row idx of V^{-1} solves V^T r = e_idx.
  FieldMatrix vt = Transpose(GeneralizedVandermonde(f, points.values(), support));
  std::vector<FieldElement> unit(support.size());
  unit[*idx] = {1};
  return Solve(f, vt, unit);
}

}  // namespace polydot
