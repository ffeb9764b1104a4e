// Copyright 2026 The ldpir Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ldpir/field.h"

namespace ldpir {

// Dense row-major matrix of canonical residues.
class Matrix {
 public:
  Matrix(FieldModulus mod, size_t rows, size_t cols)
      : mod_(mod), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const FieldModulus& modulus() const { return mod_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  u64& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  u64 at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

 private:
  FieldModulus mod_;
  size_t rows_;
  size_t cols_;
  std::vector<u64> data_;
};

// Reduced row echelon form in place. Columns are scanned left to right and
// the first row (from the current one down) with a nonzero entry becomes
// the pivot. Returns the pivot column of each nonzero row.
std::vector<size_t> row_reduce(Matrix& m);

// The canonical nullspace vector: the highest-index free column set to 1,
// every other free column 0, pivot variables solved. Empty when the
// kernel is trivial.
std::optional<std::vector<u64>> canonical_kernel_vector(Matrix m);

}  // namespace ldpir
