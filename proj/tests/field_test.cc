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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "polydot/error.h"
#include "polydot/exponent_set.h"
#include "polydot/rng.h"

namespace polydot {
namespace {

FieldElement E(std::uint64_t v) { return {v}; }

std::vector<FieldElement> Es(std::initializer_list<std::uint64_t> vs) {
  std::vector<FieldElement> out;
  for (auto v : vs) out.push_back({v});
  return out;
}

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no polydot::Error thrown";
  return ErrorCode::kParse;
}

TEST(IsPrimeTest, SmallAndLarge) {
  EXPECT_FALSE(IsPrime(0));
  EXPECT_FALSE(IsPrime(1));
  EXPECT_TRUE(IsPrime(2));
  EXPECT_TRUE(IsPrime(7));
  EXPECT_FALSE(IsPrime(91));
  EXPECT_TRUE(IsPrime(PrimeField::kDefaultModulus));
  EXPECT_FALSE(IsPrime(PrimeField::kDefaultModulus + 2));
  // Strong pseudoprime to several small bases.
  EXPECT_FALSE(IsPrime(3215031751ULL));
  EXPECT_TRUE(IsPrime(9223372036854775783ULL));  // largest prime < 2^63
}

TEST(PrimeFieldTest, RejectsComposite) {
  EXPECT_EQ(CodeOf([] { PrimeField f(15); }), ErrorCode::kNotPrime);
  EXPECT_EQ(CodeOf([] { PrimeField f(1); }), ErrorCode::kNotPrime);
}

TEST(PrimeFieldTest, Inverse) {
  PrimeField f;
  EXPECT_EQ(f.Inv(E(1)), E(1));
  EXPECT_EQ(PrimeField(7).Inv(E(2)), E(4));
  EXPECT_EQ(CodeOf([&] { f.Inv(E(0)); }), ErrorCode::kZeroInverse);
}

TEST(PrimeFieldTest, ArithmeticMatchesWideIntegers) {
  PrimeField f;
  const std::uint64_t q = f.modulus();
  std::mt19937_64 gen(7);
  for (int k = 0; k < 1000; ++k) {
    const std::uint64_t a = gen() % q, b = gen() % q;
    EXPECT_EQ(f.Add(E(a), E(b)).value, (a + b) % q);
    EXPECT_EQ(f.Sub(E(a), E(b)).value, (a + q - b) % q);
    EXPECT_EQ(f.Mul(E(a), E(b)).value,
              static_cast<std::uint64_t>((unsigned __int128)a * b % q));
    if (a != 0) EXPECT_EQ(f.Mul(E(a), f.Inv(E(a))), E(1));
  }
}

TEST(PrimeFieldTest, PowAndCanonical) {
  PrimeField f(101);
  EXPECT_EQ(f.Pow(E(2), 0), E(1));
  EXPECT_EQ(f.Pow(E(2), 5), E(32));
  EXPECT_EQ(f.Pow(E(3), 100), E(1));  // Fermat
  EXPECT_EQ(f.FromCanonical(100), E(100));
  EXPECT_EQ(CodeOf([&] { f.FromCanonical(101); }), ErrorCode::kParse);
}

TEST(ExponentSetTest, SortsAndDedups) {
  ExponentSet s{5, 1, 3, 1};
  EXPECT_EQ(s.values(), (std::vector<Exponent>{1, 3, 5}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.IndexOf(5), 2u);
  EXPECT_FALSE(s.IndexOf(4).has_value());
  EXPECT_EQ(ExponentSet::Range(2, 3), (ExponentSet{2, 3, 4}));
}

TEST(ExponentSetTest, Sumset) {
  const ExponentSet s{3, 9};
  EXPECT_EQ(Sumset({0}, s), s);
  EXPECT_EQ(Sumset({0, 1}, {0, 2}), (ExponentSet{0, 1, 2, 3}));
  EXPECT_EQ(Sumset(ExponentSet::Range(0, 6), {0, 2, 6, 8, 10, 11}),
            ExponentSet::Range(0, 17));
}

TEST(ExponentSetTest, UnionIntersect) {
  ExponentSet a{1, 2, 3}, b{3, 4};
  EXPECT_EQ(a.Union(b), (ExponentSet{1, 2, 3, 4}));
  EXPECT_EQ(a.Intersect(b), (ExponentSet{3}));
}

TEST(EvaluationPointsTest, Validates) {
  EXPECT_EQ(CodeOf([] { EvaluationPoints p(Es({1, 0})); }),
            ErrorCode::kInvalidPoints);
  EXPECT_EQ(CodeOf([] { EvaluationPoints p(Es({2, 3, 2})); }),
            ErrorCode::kInvalidPoints);
  EvaluationPoints p(Es({4, 5, 6}));
  EXPECT_EQ(p.Prefix(2), EvaluationPoints(Es({4, 5})));
}

TEST(EvalSparseTest, Examples) {
  PrimeField f7(7), f101(101);
  EXPECT_EQ(EvalSparse(f7, {0}, Es({5}), E(3)), E(5));
  EXPECT_EQ(EvalSparse(f7, {0, 1}, Es({1, 1}), E(2)), E(3));
  EXPECT_EQ(EvalSparse(f101, {2, 5}, Es({3, 1}), E(2)), E(44));
  EXPECT_EQ(CodeOf([&] { EvalSparse(f7, {0, 1}, Es({1}), E(2)); }),
            ErrorCode::kLengthMismatch);
}

TEST(VandermondeSolveTest, Examples) {
  PrimeField f7(7);
  EXPECT_EQ(VandermondeSolve(f7, EvaluationPoints(Es({3})), {0}, Es({6})),
            Es({6}));
  EXPECT_EQ(VandermondeSolve(f7, EvaluationPoints(Es({1, 2})), {0, 1},
                             Es({3, 5})),
            Es({1, 2}));
  // a and -a collapse even powers.
  EXPECT_EQ(CodeOf([&] {
              VandermondeSolve(f7, EvaluationPoints(Es({3, 4})), {0, 2},
                               Es({1, 1}));
            }),
            ErrorCode::kSingularMatrix);
}

TEST(VandermondeSolveTest, RoundTripsRandomSparsePolynomials) {
  PrimeField f;
  const ExponentSet support{0, 3, 4, 9, 17, 30};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CounterRng rng(seed, "test");
    std::vector<FieldElement> coeffs, pts, vals;
    for (std::size_t k = 0; k < support.size(); ++k) {
      coeffs.push_back(rng.UniformElement(f));
      pts.push_back(rng.UniformNonzero(f));
    }
    EvaluationPoints points(pts);
    for (auto x : pts) vals.push_back(EvalSparse(f, support, coeffs, x));
    EXPECT_EQ(VandermondeSolve(f, points, support, vals), coeffs);
  }
}

TEST(ExtractionVectorTest, Examples) {
  PrimeField f7(7);
  EXPECT_EQ(ExtractionVector(f7, EvaluationPoints(Es({5})), {0}, 0), Es({1}));
  EXPECT_EQ(ExtractionVector(f7, EvaluationPoints(Es({1, 2})), {0, 1}, 0),
            Es({2, 6}));
  EXPECT_EQ(CodeOf([&] {
              ExtractionVector(f7, EvaluationPoints(Es({1, 2})), {0, 1}, 4);
            }),
            ErrorCode::kTargetNotInSupport);
}

TEST(ExtractionVectorTest, RecoversEveryCoefficient) {
  PrimeField f;
  const ExponentSet support{1, 2, 5, 6, 11};
  CounterRng rng(3, "test");
  std::vector<FieldElement> pts;
  for (std::size_t k = 0; k < support.size(); ++k) pts.push_back(rng.UniformNonzero(f));
  EvaluationPoints points(pts);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FieldElement> coeffs;
    for (std::size_t k = 0; k < support.size(); ++k) coeffs.push_back(rng.UniformElement(f));
    for (std::size_t k = 0; k < support.size(); ++k) {
      auto r = ExtractionVector(f, points, support, support[k]);
      FieldElement acc{0};
      for (std::size_t n = 0; n < pts.size(); ++n) {
        acc = f.Add(acc, f.Mul(r[n], EvalSparse(f, support, coeffs, pts[n])));
      }
      EXPECT_EQ(acc, coeffs[k]);
    }
  }
}

TEST(MatrixTest, InverseAndRank) {
  PrimeField f(101);
  FieldMatrix a(2, 2);
  a(0, 0) = E(1), a(0, 1) = E(2), a(1, 0) = E(3), a(1, 1) = E(4);
  EXPECT_EQ(MatMul(f, a, Inverse(f, a)), FieldMatrix::Identity(2));
  EXPECT_EQ(Rank(f, a), 2u);
  FieldMatrix b(2, 3);
  b(0, 0) = E(1), b(0, 1) = E(2), b(0, 2) = E(3);
  b(1, 0) = E(2), b(1, 1) = E(4), b(1, 2) = E(6);
  EXPECT_EQ(Rank(f, b), 1u);
  EXPECT_EQ(CodeOf([&] { Inverse(f, FieldMatrix(2, 2)); }),
            ErrorCode::kSingularMatrix);
  EXPECT_EQ(CodeOf([&] { MatMul(f, b, b); }), ErrorCode::kDimensionMismatch);
}

TEST(MatrixTest, SolveAgreesWithInverse) {
  PrimeField f;
  CounterRng rng(11, "test");
  FieldMatrix a = rng.UniformMatrix(f, 6, 6);
  std::vector<FieldElement> b;
  for (int k = 0; k < 6; ++k) b.push_back(rng.UniformElement(f));
  auto x = Solve(f, a, b);
  FieldMatrix xm(6, 1);
  for (std::size_t k = 0; k < 6; ++k) xm(k, 0) = x[k];
  FieldMatrix ax = MatMul(f, a, xm);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(ax(k, 0), b[k]);
}

TEST(CounterRngTest, StreamsAreKeyedAndReproducible) {
  PrimeField f;
  CounterRng a1(5, "A"), a2(5, "A"), b(5, "B"), w1(5, "W", 1), w2(5, "W", 2);
  const auto x = a1.UniformMatrix(f, 3, 3);
  EXPECT_EQ(x, a2.UniformMatrix(f, 3, 3));
  EXPECT_NE(x, b.UniformMatrix(f, 3, 3));
  EXPECT_NE(w1.Next(), w2.Next());
  CounterRng small(9, "x");
  for (int k = 0; k < 1000; ++k) {
    auto v = small.UniformNonzero(PrimeField(7));
    EXPECT_GE(v.value, 1u);
    EXPECT_LT(v.value, 7u);
  }
}

}  // namespace
}  // namespace polydot
