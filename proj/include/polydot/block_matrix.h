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

#ifndef POLYDOT_BLOCK_MATRIX_H_
#define POLYDOT_BLOCK_MATRIX_H_

#include <cstddef>
#include <istream>
#include <ostream>
#include <vector>

#include "polydot/field.h"

namespace polydot {

// A rows_blocks x cols_blocks grid of equally sized dense blocks.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  // All-zero grid.
  BlockMatrix(std::size_t rows_blocks, std::size_t cols_blocks,
              std::size_t block_rows, std::size_t block_cols);

  std::size_t rows_blocks() const { return rows_blocks_; }
  std::size_t cols_blocks() const { return cols_blocks_; }
  std::size_t block_rows() const { return block_rows_; }
  std::size_t block_cols() const { return block_cols_; }

  const FieldMatrix& block(std::size_t i, std::size_t j) const {
    return blocks_[i * cols_blocks_ + j];
  }
  // Throws kShapeMismatch if `b` does not have the block shape.
  void set_block(std::size_t i, std::size_t j, FieldMatrix b);

  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  std::size_t rows_blocks_ = 0;
  std::size_t cols_blocks_ = 0;
  std::size_t block_rows_ = 0;
  std::size_t block_cols_ = 0;
  std::vector<FieldMatrix> blocks_;
};

// Splits a square m x m matrix into row_parts x col_parts blocks of size
// (m/row_parts) x (m/col_parts). Throws kIndivisibleDimensions.
BlockMatrix Partition(const FieldMatrix& m, std::size_t row_parts,
                      std::size_t col_parts);

// Block (i,j) of the result is the transpose of input block (j,i).
BlockMatrix TransposeBlockwise(const BlockMatrix& b);

// Block product: out(i,l) = sum_j x(i,j) * y(j,l).
BlockMatrix BlockMatMul(const PrimeField& f, const BlockMatrix& x,
                        const BlockMatrix& y);

// Inverse of Partition.
FieldMatrix Assemble(const BlockMatrix& b);

// Square matrix file: first line "m q", then m lines of m base-10 values.
struct MatrixFile {
  std::uint64_t modulus = PrimeField::kDefaultModulus;
  FieldMatrix matrix;
};

// Throws kParse (or kNotPrime for the header modulus).
MatrixFile ReadMatrixFile(std::istream& in);
void WriteMatrixFile(std::ostream& out, const MatrixFile& file);

}  // namespace polydot

#endif  // POLYDOT_BLOCK_MATRIX_H_
