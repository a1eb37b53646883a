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

#include <sstream>
#include <string>
#include <utility>

#include "polydot/error.h"

namespace polydot {

BlockMatrix::BlockMatrix(std::size_t rows_blocks, std::size_t cols_blocks,
                         std::size_t block_rows, std::size_t block_cols)
    : rows_blocks_(rows_blocks),
      cols_blocks_(cols_blocks),
      block_rows_(block_rows),
      block_cols_(block_cols),
      blocks_(rows_blocks * cols_blocks, FieldMatrix(block_rows, block_cols)) {}

void BlockMatrix::set_block(std::size_t i, std::size_t j, FieldMatrix b) {
  if (b.rows() != block_rows_ || b.cols() != block_cols_) {
    throw Error(ErrorCode::kShapeMismatch,
                "block is " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()) + ", grid expects " +
                    std::to_string(block_rows_) + "x" +
                    std::to_string(block_cols_));
  }
  blocks_[i * cols_blocks_ + j] = std::move(b);
}

BlockMatrix Partition(const FieldMatrix& m, std::size_t row_parts,
                      std::size_t col_parts) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "partition expects a square matrix");
  }
  const std::size_t n = m.rows();
  if (row_parts == 0 || col_parts == 0 || n % row_parts != 0 ||
      n % col_parts != 0) {
    throw Error(ErrorCode::kIndivisibleDimensions,
                std::to_string(row_parts) + " and " + std::to_string(col_parts) +
                    " must both divide " + std::to_string(n));
  }
  const std::size_t br = n / row_parts;
  const std::size_t bc = n / col_parts;
  BlockMatrix out(row_parts, col_parts, br, bc);
  for (std::size_t i = 0; i < row_parts; ++i) {
    for (std::size_t j = 0; j < col_parts; ++j) {
      FieldMatrix b(br, bc);
      for (std::size_t r = 0; r < br; ++r) {
        for (std::size_t c = 0; c < bc; ++c) b(r, c) = m(i * br + r, j * bc + c);
      }
      out.set_block(i, j, std::move(b));
    }
  }
  return out;
}

BlockMatrix TransposeBlockwise(const BlockMatrix& b) {
  BlockMatrix out(b.cols_blocks(), b.rows_blocks(), b.block_cols(),
                  b.block_rows());
  for (std::size_t i = 0; i < out.rows_blocks(); ++i) {
    for (std::size_t j = 0; j < out.cols_blocks(); ++j) {
      out.set_block(i, j, Transpose(b.block(j, i)));
    }
  }
  return out;
}

BlockMatrix BlockMatMul(const PrimeField& f, const BlockMatrix& x,
                        const BlockMatrix& y) {
  if (x.cols_blocks() != y.rows_blocks() || x.block_cols() != y.block_rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "block grids do not conform");
  }
  BlockMatrix out(x.rows_blocks(), y.cols_blocks(), x.block_rows(),
                  y.block_cols());
  for (std::size_t i = 0; i < x.rows_blocks(); ++i) {
    for (std::size_t l = 0; l < y.cols_blocks(); ++l) {
      FieldMatrix acc(x.block_rows(), y.block_cols());
      for (std::size_t j = 0; j < x.cols_blocks(); ++j) {
        acc = MatAdd(f, acc, MatMul(f, x.block(i, j), y.block(j, l)));
      }
      out.set_block(i, l, std::move(acc));
    }
  }
  return out;
}

FieldMatrix Assemble(const BlockMatrix& b) {
  FieldMatrix out(b.rows_blocks() * b.block_rows(),
                  b.cols_blocks() * b.block_cols());
  for (std::size_t i = 0; i < b.rows_blocks(); ++i) {
    for (std::size_t j = 0; j < b.cols_blocks(); ++j) {
      const FieldMatrix& blk = b.block(i, j);
      for (std::size_t r = 0; r < b.block_rows(); ++r) {
        for (std::size_t c = 0; c < b.block_cols(); ++c) {
          out(i * b.block_rows() + r, j * b.block_cols() + c) = blk(r, c);
        }
      }
    }
  }
  return out;
}

MatrixFile ReadMatrixFile(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kParse, "missing header");
  std::istringstream header(line);
  std::uint64_t m = 0;
  std::uint64_t q = 0;
  std::string extra;
  if (!(header >> m >> q) || (header >> extra) || m == 0) {
    throw Error(ErrorCode::kParse, "header must be \"m q\" with m >= 1");
  }
  const PrimeField field(q);
  MatrixFile file{q, FieldMatrix(m, m)};
  for (std::uint64_t r = 0; r < m; ++r) {
    if (!std::getline(in, line)) {
      throw Error(ErrorCode::kParse, "expected " + std::to_string(m) + " rows");
    }
    std::istringstream row(line);
    for (std::uint64_t c = 0; c < m; ++c) {
      std::uint64_t v = 0;
      if (!(row >> v)) {
        throw Error(ErrorCode::kParse, "row " + std::to_string(r) + " is short");
      }
      file.matrix(r, c) = field.FromCanonical(v);
    }
    if (row >> extra) {
      throw Error(ErrorCode::kParse, "row " + std::to_string(r) + " is long");
    }
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw Error(ErrorCode::kParse, "trailing data after matrix rows");
    }
  }
  return file;
}

void WriteMatrixFile(std::ostream& out, const MatrixFile& file) {
  const FieldMatrix& m = file.matrix;
  out << m.rows() << ' ' << file.modulus << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out << ' ';
      out << m(r, c).value;
    }
    out << '\n';
  }
}

}  // namespace polydot
