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

#include "ldpir/linalg.h"

#include <utility>

namespace ldpir {

std::vector<size_t> row_reduce(Matrix& m) {
  const FieldModulus& mod = m.modulus();
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    const u64 scale = mod.inv(m.at(row, col));
    for (size_t c = col; c < m.cols(); ++c) m.at(row, c) = mod.mul(m.at(row, c), scale);
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const u64 factor = m.at(r, col);
      for (size_t c = col; c < m.cols(); ++c) {
        m.at(r, c) = mod.sub(m.at(r, c), mod.mul(factor, m.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<std::vector<u64>> canonical_kernel_vector(Matrix m) {
  const std::vector<size_t> pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  size_t free_col = m.cols();
  for (size_t c = m.cols(); c-- > 0;) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == m.cols()) return std::nullopt;

  const FieldModulus& mod = m.modulus();
  std::vector<u64> x(m.cols(), 0);
  x[free_col] = 1;
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = mod.neg(m.at(r, free_col));
  return x;
}

}  // namespace ldpir
