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

// Helpers shared by the test suites.

#ifndef DKS1D_TESTS_TEST_SUPPORT_HPP_
#define DKS1D_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "dks1d/instance.hpp"
#include "dks1d/numerics.hpp"
#include "dks1d/oracle.hpp"

namespace dks1d::testing {

// Integer gaps uniform in [1, hi], drawn with a fixed engine so that every
// suite sees the same instances run to run.
inline std::vector<std::int64_t> int_gaps(std::mt19937_64& rng, std::size_t count,
                                          std::int64_t hi = 50) {
  std::uniform_int_distribution<std::int64_t> dist(1, hi);
  std::vector<std::int64_t> g(count);
  for (auto& x : g) x = dist(rng);
  return g;
}

template <Scalar T>
Instance<T> make_instance(const std::vector<std::int64_t>& gaps) {
  std::vector<T> v;
  for (auto g : gaps) v.push_back(T(g));
  return Instance<T>(std::move(v));
}

template <Scalar T>
Instance<T> ratio_instance(std::initializer_list<std::pair<std::int64_t, std::int64_t>> gaps) {
  std::vector<T> v;
  for (auto [p, q] : gaps) v.push_back(scalar_from_ratio<T>(p, q));
  return Instance<T>(std::move(v));
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

// F(x) = min of v_1^2 + ... + v_level^2 over w_1..w_{level-1} with
// w_level = x, under the program's constraints that involve only those
// weights. Solved by the brute-force active-set engine; w_level = x is
// imposed as a pair of opposite inequalities.
inline double partial_minimum(const std::vector<double>& gaps, std::size_t level, double x) {
  const std::size_t m = level;
  QuadraticProgram<double> qp{DenseMatrix<double>(m, m), {}, {}};
  for (std::size_t k = 0; k < level; ++k) {
    // v_{k+1} = d_{k+1} w_{k+1} - d_k w_k
    std::vector<double> a(m, 0.0);
    a[k] = gaps[k];
    if (k > 0) a[k - 1] = -gaps[k - 1];
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) qp.hessian(r, c) += a[r] * a[c];
    }
  }
  auto add = [&](std::vector<double> row, double rhs) {
    qp.rows.push_back(std::move(row));
    qp.rhs.push_back(rhs);
  };
  std::vector<double> row(m, 0.0);
  row[0] = 1;
  add(row, 1.0);
  for (std::size_t j = 1; j + 1 < m; ++j) {
    std::vector<double> pair(m, 0.0);
    pair[j] = pair[j + 1] = 1;
    add(pair, 1.0);
  }
  std::vector<double> fix(m, 0.0);
  fix[m - 1] = 1;
  add(fix, x);
  fix[m - 1] = -1;
  add(fix, -x);
  const auto best = detail::enumerate(qp, SingularPolicy::kReject, Execution::kSerial);
  return best->q;
}

// R_level(x) from its definition: d/dx F(x) + 2 d_level^2 x, with the
// derivative taken by central differences.
inline double r_from_definition(const std::vector<double>& gaps, std::size_t level, double x) {
  const double h = 1e-6;
  const double dfdx =
      (partial_minimum(gaps, level, x + h) - partial_minimum(gaps, level, x - h)) / (2 * h);
  const double d = gaps[level - 1];
  return dfdx + 2 * d * d * x;
}

}  // namespace dks1d::testing

#endif  // DKS1D_TESTS_TEST_SUPPORT_HPP_
