// Copyright 2026 The dks1d Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense Gaussian elimination for the desk-sized systems of the oracle.

#ifndef DKS1D_LINSOLVE_HPP_
#define DKS1D_LINSOLVE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dks1d/numerics.hpp"

namespace dks1d {

template <Scalar T>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void swap_rows(std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> a_;
};

enum class SingularPolicy {
  kReject,        // return nullopt on rank deficiency
  kLeastNorm,     // consistent singular systems: minimum-norm solution
};

// Solves a x = b for square `a`. The float backend pivots on the largest
// magnitude in the column and treats entries below `pivot_tol` as zero; the
// exact backend takes the first nonzero entry. Inconsistent systems always
// return nullopt. The least-norm solution of a rank-deficient system is
// R^T (R R^T)^{-1} c, where [R | c] are the nonzero rows of the echelon form.
template <Scalar T>
std::optional<std::vector<T>> solve_linear(DenseMatrix<T> a, std::vector<T> b,
                                           SingularPolicy policy, const T& pivot_tol = T(0)) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t best = n;
    T best_mag(0);
    for (std::size_t r = row; r < n; ++r) {
      const T mag = scalar_abs<T>(a(r, col));
      if (!(mag > pivot_tol)) continue;
      if constexpr (is_exact_v<T>) {
        best = r;
        break;
      } else if (best == n || mag > best_mag) {
        best = r;
        best_mag = mag;
      }
    }
    if (best == n) {
      if (policy == SingularPolicy::kReject) return std::nullopt;
      continue;
    }
    a.swap_rows(row, best);
    std::swap(b[row], b[best]);
    for (std::size_t r = row + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const T f = a(r, col) / a(row, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(row, c);
      b[r] -= f * b[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // Rows without a pivot must reduce to 0 = 0.
  for (std::size_t r = row; r < n; ++r) {
    if (scalar_abs<T>(b[r]) > pivot_tol) return std::nullopt;
  }
  std::vector<T> x(n, T(0));
  if (row < n) {
    const std::size_t rank = row;
    DenseMatrix<T> gram(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = 0; j < rank; ++j) {
        T acc(0);
        for (std::size_t c = 0; c < n; ++c) acc += a(i, c) * a(j, c);
        gram(i, j) = acc;
      }
    }
    auto y = solve_linear(std::move(gram), std::vector<T>(b.begin(), b.begin() + rank),
                          SingularPolicy::kReject, pivot_tol * pivot_tol);
    if (!y) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < rank; ++i) x[c] += a(i, c) * (*y)[i];
    }
    return x;
  }
  for (std::size_t r = row; r-- > 0;) {
    const std::size_t col = pivot_col_of_row[r];
    T acc = b[r];
    for (std::size_t c = col + 1; c < n; ++c) {
      if (a(r, c) != 0) acc -= a(r, c) * x[c];
    }
    x[col] = acc / a(r, col);
  }
  return x;
}

}  // namespace dks1d

#endif  // DKS1D_LINSOLVE_HPP_
