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

#include "polydot/block_matrix.h"

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.h"
#include "polydot/error.h"
#include "polydot/rng.h"

namespace polydot {
namespace {

FieldMatrix Seq(std::size_t rows, std::size_t cols) {
  FieldMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = {r * cols + c + 1};
  }
  return m;
}

oracle::Matrix ToRows(const FieldMatrix& m) {
  oracle::Matrix out(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).value;
  }
  return out;
}

TEST(PartitionTest, IdentitySplitsDiagonally) {
  BlockMatrix b = Partition(FieldMatrix::Identity(4), 2, 2);
  EXPECT_EQ(b.block(0, 0), FieldMatrix::Identity(2));
  EXPECT_EQ(b.block(1, 1), FieldMatrix::Identity(2));
  EXPECT_TRUE(b.block(0, 1).IsZero());
  EXPECT_TRUE(b.block(1, 0).IsZero());
}

TEST(PartitionTest, TrivialAndIndivisible) {
  FieldMatrix m = Seq(6, 6);
  EXPECT_EQ(Partition(m, 1, 1).block(0, 0), m);
  try {
    Partition(m, 4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndivisibleDimensions);
  }
}

TEST(PartitionTest, BlocksAreRowMajor) {
  BlockMatrix b = Partition(Seq(4, 4), 2, 4);
  EXPECT_EQ(b.block_rows(), 2u);
  EXPECT_EQ(b.block_cols(), 1u);
  EXPECT_EQ(b.block(1, 2)(0, 0).value, 11u);  // row 2, column 2
}

TEST(AssembleTest, RoundTrip) {
  for (auto [s, t] : {std::pair{1, 1}, {2, 3}, {3, 2}, {6, 1}, {1, 6}}) {
    FieldMatrix m = Seq(6, 6);
    EXPECT_EQ(Assemble(Partition(m, s, t)), m);
  }
  EXPECT_TRUE(Assemble(BlockMatrix(2, 2, 3, 3)).IsZero());
}

TEST(TransposeBlockwiseTest, Shapes) {
  BlockMatrix b(2, 1, 1, 3);
  BlockMatrix tb = TransposeBlockwise(b);
  EXPECT_EQ(tb.rows_blocks(), 1u);
  EXPECT_EQ(tb.cols_blocks(), 2u);
  EXPECT_EQ(tb.block_rows(), 3u);
  EXPECT_EQ(tb.block_cols(), 1u);
  BlockMatrix id = Partition(FieldMatrix::Identity(4), 2, 2);
  EXPECT_EQ(TransposeBlockwise(id), id);
  BlockMatrix any = Partition(Seq(6, 6), 3, 2);
  EXPECT_EQ(TransposeBlockwise(TransposeBlockwise(any)), any);
  EXPECT_EQ(Assemble(TransposeBlockwise(Partition(Seq(6, 6), 3, 2))),
            Transpose(Seq(6, 6)));
}

TEST(BlockMatMulTest, Examples) {
  PrimeField f7(7);
  BlockMatrix x(1, 1, 1, 1), y(1, 1, 1, 1);
  FieldMatrix three(1, 1), five(1, 1);
  three(0, 0) = {3};
  five(0, 0) = {5};
  x.set_block(0, 0, three);
  y.set_block(0, 0, five);
  EXPECT_EQ(BlockMatMul(f7, x, y).block(0, 0)(0, 0).value, 1u);

  PrimeField f(101);
  BlockMatrix m = Partition(Seq(4, 4), 2, 2);
  EXPECT_EQ(BlockMatMul(f, m, Partition(FieldMatrix::Identity(4), 2, 2)),
            Partition(Seq(4, 4), 2, 2));
}

TEST(BlockMatMulTest, TransposeProductMatchesDenseOracle) {
  PrimeField f(101);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CounterRng rng(seed, "test");
    FieldMatrix a = rng.UniformMatrix(f, 4, 4), b = rng.UniformMatrix(f, 4, 4);
    BlockMatrix at = TransposeBlockwise(Partition(a, 2, 2));
    FieldMatrix y = Assemble(BlockMatMul(f, at, Partition(b, 2, 2)));
    EXPECT_EQ(ToRows(y), oracle::TransposeProduct(101, ToRows(a), ToRows(b)));
  }
}

TEST(SetBlockTest, RejectsWrongShape) {
  BlockMatrix b(2, 2, 2, 2);
  try {
    b.set_block(0, 0, FieldMatrix(3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
}

TEST(MatrixFileTest, RoundTrip) {
  MatrixFile file{101, Seq(3, 3)};
  std::ostringstream out;
  WriteMatrixFile(out, file);
  EXPECT_EQ(out.str(), "3 101\n1 2 3\n4 5 6\n7 8 9\n");
  std::istringstream in(out.str());
  MatrixFile back = ReadMatrixFile(in);
  EXPECT_EQ(back.modulus, 101u);
  EXPECT_EQ(back.matrix, file.matrix);
}

TEST(MatrixFileTest, RejectsMalformedInput) {
  const char* bad[] = {
      "",                    // no header
      "2 101\n1 2\n3\n",     // short row
      "2 101\n1 2\n3 4 5\n", // long row
      "2 101\n1 2\n3 101\n", // value not below q
      "2 101\n1 x\n3 4\n",   // not a number
      "2 101\n1 2\n",        // missing row
  };
  for (const char* text : bad) {
    std::istringstream in(text);
    try {
      ReadMatrixFile(in);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << text;
    }
  }
  std::istringstream composite("2 100\n1 2\n3 4\n");
  try {
    ReadMatrixFile(composite);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPrime);
  }
}

}  // namespace
}  // namespace polydot
