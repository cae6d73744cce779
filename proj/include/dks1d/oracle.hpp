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

// Brute-force reference optimizer for tiny instances.
//
// Every subset S of the inequality constraints a_c . w >= b_c is tried as an
// equality set: the KKT system
//
//   [ 2H   -A_S^T ] [ w      ]   [ 0   ]
//   [ A_S   0     ] [ lambda ] = [ b_S ]
//
// is solved, and the candidate is kept when it is primal feasible with
// nonnegative multipliers. For a convex quadratic every such point is a
// global minimizer, so the smallest objective over kept candidates is the
// optimum. This shares no code with the chain-based solver.

#ifndef DKS1D_ORACLE_HPP_
#define DKS1D_ORACLE_HPP_

#include <cstddef>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dks1d/errors.hpp"
#include "dks1d/execution.hpp"
#include "dks1d/instance.hpp"
#include "dks1d/linsolve.hpp"
#include "dks1d/numerics.hpp"

namespace dks1d {

template <Scalar T>
struct OracleResult {
  std::vector<T> weights;  // consecutive weights, or all-pairs in (i<j) row order
  T q_value{0};
  std::vector<std::size_t> active_set;
};

// minimize w^T H w subject to rows[c] . w >= rhs[c].
template <Scalar T>
struct QuadraticProgram {
  DenseMatrix<T> hessian;
  std::vector<std::vector<T>> rows;
  std::vector<T> rhs;
};

namespace detail {

template <Scalar T>
struct Candidate {
  std::uint64_t mask = 0;
  std::vector<T> x;
  T q{0};
};

template <Scalar T>
T quad_form(const DenseMatrix<T>& h, const std::vector<T>& x) {
  T q(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    T row(0);
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (h(i, j) != 0) row += h(i, j) * x[j];
    }
    q += x[i] * row;
  }
  return q;
}

template <Scalar T>
struct OracleTolerances {
  T feasibility{0};
  T multiplier{0};
  T pivot{0};
};

template <Scalar T>
OracleTolerances<T> oracle_tolerances(const QuadraticProgram<T>& qp) {
  if constexpr (is_exact_v<T>) {
    return {};
  } else {
    T scale(1);
    for (std::size_t i = 0; i < qp.hessian.rows(); ++i) {
      for (std::size_t j = 0; j < qp.hessian.cols(); ++j) {
        scale = std::max(scale, 2 * std::abs(qp.hessian(i, j)));
      }
    }
    return {1e-9, 1e-9 * scale, 1e-12 * scale};
  }
}

template <Scalar T>
std::optional<Candidate<T>> try_active_set(const QuadraticProgram<T>& qp, std::uint64_t mask,
                                           SingularPolicy policy,
                                           const OracleTolerances<T>& tol) {
  const std::size_t m = qp.hessian.rows();
  std::vector<std::size_t> active;
  for (std::size_t c = 0; c < qp.rows.size(); ++c) {
    if ((mask >> c) & 1U) active.push_back(c);
  }
  const std::size_t dim = m + active.size();
  DenseMatrix<T> kkt(dim, dim);
  std::vector<T> rhs(dim, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) kkt(i, j) = 2 * qp.hessian(i, j);
  }
  for (std::size_t k = 0; k < active.size(); ++k) {
    const auto& row = qp.rows[active[k]];
    for (std::size_t j = 0; j < m; ++j) {
      kkt(j, m + k) = -row[j];
      kkt(m + k, j) = row[j];
    }
    rhs[m + k] = qp.rhs[active[k]];
  }
  auto sol = solve_linear(std::move(kkt), std::move(rhs), policy, tol.pivot);
  if (!sol) return std::nullopt;
  for (std::size_t k = 0; k < active.size(); ++k) {
    if ((*sol)[m + k] < -tol.multiplier) return std::nullopt;
  }
  sol->resize(m);
  for (std::size_t c = 0; c < qp.rows.size(); ++c) {
    T lhs(0);
    for (std::size_t j = 0; j < m; ++j) lhs += qp.rows[c][j] * (*sol)[j];
    if (lhs < qp.rhs[c] - tol.feasibility) return std::nullopt;
  }
  Candidate<T> cand;
  cand.mask = mask;
  cand.q = quad_form(qp.hessian, *sol);
  cand.x = std::move(*sol);
  return cand;
}

// Lower objective wins; ties go to the smaller mask so both execution modes
// pick the same candidate.
template <Scalar T>
bool better(const Candidate<T>& a, const std::optional<Candidate<T>>& b) {
  return !b || a.q < b->q || (a.q == b->q && a.mask < b->mask);
}

template <Scalar T>
std::optional<Candidate<T>> enumerate_serial(const QuadraticProgram<T>& qp,
                                             SingularPolicy policy) {
  const auto tol = oracle_tolerances(qp);
  const std::uint64_t count = std::uint64_t{1} << qp.rows.size();
  std::optional<Candidate<T>> best;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    auto cand = try_active_set(qp, mask, policy, tol);
    if (cand && better(*cand, best)) best = std::move(cand);
  }
  return best;
}

template <Scalar T>
std::optional<Candidate<T>> enumerate_parallel(const QuadraticProgram<T>& qp,
                                               SingularPolicy policy) {
  const auto tol = oracle_tolerances(qp);
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << qp.rows.size());
  std::optional<Candidate<T>> best;
#pragma omp parallel
  {
    std::optional<Candidate<T>> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t mask = 0; mask < count; ++mask) {
      auto cand = try_active_set(qp, static_cast<std::uint64_t>(mask), policy, tol);
      if (cand && better(*cand, local)) local = std::move(cand);
    }
#pragma omp critical(dks1d_oracle_reduce)
    {
      if (local && better(*local, best)) best = std::move(local);
    }
  }
  return best;
}

template <Scalar T>
std::optional<Candidate<T>> enumerate(const QuadraticProgram<T>& qp, SingularPolicy policy,
                                      Execution exec) {
  return exec == Execution::kSerial ? enumerate_serial(qp, policy)
                                    : enumerate_parallel(qp, policy);
}

}  // namespace detail

// The consecutive-edge program: H is tridiagonal with H_jj = 2 d_j^2 and
// H_{j,j+1} = -d_j d_{j+1}; constraints as in consecutive_constraints().
template <Scalar T>
QuadraticProgram<T> consecutive_program(const Instance<T>& inst) {
  const std::size_t m = inst.num_weights();
  const auto gaps = inst.gaps();
  QuadraticProgram<T> qp{DenseMatrix<T>(m, m), {}, {}};
  for (std::size_t j = 0; j < m; ++j) {
    qp.hessian(j, j) = 2 * gaps[j] * gaps[j];
    if (j + 1 < m) {
      qp.hessian(j, j + 1) = -gaps[j] * gaps[j + 1];
      qp.hessian(j + 1, j) = -gaps[j] * gaps[j + 1];
    }
  }
  for (const Constraint& c : consecutive_constraints(m)) {
    std::vector<T> row(m, T(0));
    row[c.first] = T(1);
    if (c.is_pair) row[c.second] = T(1);
    qp.rows.push_back(std::move(row));
    qp.rhs.push_back(T(1));
  }
  return qp;
}

inline constexpr std::size_t kOracleMaxPoints = 10;
inline constexpr std::size_t kAllPairsOracleMaxPoints = 5;

template <Scalar T>
OracleResult<T> oracle_consecutive(const Instance<T>& inst,
                                   Execution exec = Execution::kParallel) {
  if (inst.size() < 2) throw InvalidArgument("oracle: need at least 2 points");
  if (inst.size() > kOracleMaxPoints) throw InvalidArgument("oracle scale exceeded");
  const auto qp = consecutive_program(inst);
  // Q is strictly convex here, so the optimum's KKT system is nonsingular.
  auto best = detail::enumerate(qp, SingularPolicy::kReject, exec);
  if (!best) throw InvariantViolation("oracle: no KKT point found");
  OracleResult<T> res;
  res.weights = std::move(best->x);
  res.q_value = std::move(best->q);
  for (std::size_t c = 0; c < qp.rows.size(); ++c) {
    if ((best->mask >> c) & 1U) res.active_set.push_back(c);
  }
  return res;
}

// All-pairs program over weights w_ij (i < j, row order). Q is only positive
// semidefinite, so minimizers need not be unique; the optimal value is.
// Constraints: row sums >= 1 for every point, then w_ij >= 0.
template <Scalar T>
QuadraticProgram<T> allpairs_program(std::span<const T> sorted_points) {
  const std::size_t n = sorted_points.size();
  const std::size_t m = n * (n - 1) / 2;
  // Column of B for pair (i, j): +(p_j - p_i) at row i, -(p_j - p_i) at row j,
  // so v = B w and Q = w^T B^T B w.
  DenseMatrix<T> b(n, m);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++col) {
      const T diff = sorted_points[j] - sorted_points[i];
      b(i, col) = diff;
      b(j, col) = -diff;
    }
  }
  QuadraticProgram<T> qp{DenseMatrix<T>(m, m), {}, {}};
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      T acc(0);
      for (std::size_t k = 0; k < n; ++k) acc += b(k, r) * b(k, c);
      qp.hessian(r, c) = acc;
    }
  }
  col = 0;
  std::vector<std::vector<T>> sums(n, std::vector<T>(m, T(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++col) {
      sums[i][col] = T(1);
      sums[j][col] = T(1);
    }
  }
  for (auto& row : sums) {
    qp.rows.push_back(std::move(row));
    qp.rhs.push_back(T(1));
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<T> row(m, T(0));
    row[c] = T(1);
    qp.rows.push_back(std::move(row));
    qp.rhs.push_back(T(0));
  }
  return qp;
}

template <Scalar T>
OracleResult<T> oracle_allpairs(PointSet<T> points, Execution exec = Execution::kParallel) {
  if (points.size() < 2) throw InvalidArgument("oracle: need at least 2 points");
  if (points.size() > kAllPairsOracleMaxPoints) throw InvalidArgument("oracle scale exceeded");
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i] < points[i + 1])) throw InvalidArgument("degenerate gap");
  }
  const auto qp = allpairs_program<T>(points);
  auto best = detail::enumerate(qp, SingularPolicy::kLeastNorm, exec);
  if (!best) throw InvariantViolation("oracle: no KKT point found");
  OracleResult<T> res;
  res.weights = std::move(best->x);
  res.q_value = std::move(best->q);
  for (std::size_t c = 0; c < qp.rows.size(); ++c) {
    if ((best->mask >> c) & 1U) res.active_set.push_back(c);
  }
  return res;
}

// Unpacks all-pairs oracle weights into a symmetric matrix.
template <Scalar T>
SymmetricWeights<T> allpairs_matrix(std::size_t n, std::span<const T> packed) {
  SymmetricWeights<T> w(n);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++col) w.set(i, j, packed[col]);
  }
  return w;
}

}  // namespace dks1d

#endif  // DKS1D_ORACLE_HPP_
