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

// Constant-space-per-level representation of R_3, ..., R_{n-1}.
//
// Points (x_i, y_i) on the graph of R_i map to points on the graph of R_{i+1}
// by one of two homogeneous affine maps:
//
//   M = [ 0     1/xi       0 ]        L = [ -1           0   1          ]
//       [ -xi   4d'^2/xi   0 ]            [ -2xi-4d'^2  -1   xi + 4d'^2 ]
//       [ 0     0          1 ]            [ 0            0   1          ]
//
// M covers the unconstrained branch and L the branch where the pair
// constraint binds (x_{i+1} < 1 - w*). A level stores M, and for Case 2 also
// L and the breakpoint (1 - w*, R_{i+1}(1 - w*)) separating them. Only R_2 is
// stored explicitly. A query on R_i composes the per-level maps from level i
// down to level 2, picking M or L at each breakpoint by comparing the query
// with the breakpoint carried up to level i, then carries the matching piece
// of R_2 back up through the chosen maps. Each query costs O(i) matrix
// operations, and building all levels plus back-substitution costs O(n^2).

#ifndef DKS1D_IMPLICIT_CHAIN_HPP_
#define DKS1D_IMPLICIT_CHAIN_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dks1d/counters.hpp"
#include "dks1d/errors.hpp"
#include "dks1d/instance.hpp"
#include "dks1d/numerics.hpp"
#include "dks1d/plf.hpp"

namespace dks1d {

// 3x3 homogeneous affine transform acting on column vectors (x, y, 1). The
// bottom row is always (0, 0, 1), so products skip it.
template <Scalar T>
class TransformMatrix {
 public:
  TransformMatrix() : m_{T(1), T(0), T(0), T(0), T(1), T(0), T(0), T(0), T(1)} {}
  TransformMatrix(T a00, T a01, T a02, T a10, T a11, T a12)
      : m_{std::move(a00), std::move(a01), std::move(a02), std::move(a10), std::move(a11),
           std::move(a12), T(0), T(0), T(1)} {}

  static TransformMatrix identity() { return {}; }

  const T& operator()(std::size_t r, std::size_t c) const { return m_[r * 3 + c]; }

  std::pair<T, T> apply(const T& x, const T& y) const {
    return {m_[0] * x + m_[1] * y + m_[2], m_[3] * x + m_[4] * y + m_[5]};
  }

  friend TransformMatrix operator*(const TransformMatrix& a, const TransformMatrix& b) {
    const auto& p = a.m_;
    const auto& q = b.m_;
    return TransformMatrix(p[0] * q[0] + p[1] * q[3], p[0] * q[1] + p[1] * q[4],
                           p[0] * q[2] + p[1] * q[5] + p[2], p[3] * q[0] + p[4] * q[3],
                           p[3] * q[1] + p[4] * q[4], p[3] * q[2] + p[4] * q[5] + p[5]);
  }

  bool operator==(const TransformMatrix&) const = default;

 private:
  std::array<T, 9> m_;
};

// Unconstrained-branch map from the graph of R_i to the graph of R_{i+1}.
template <Scalar T>
TransformMatrix<T> m_matrix(const T& gap, const T& next_gap) {
  if (!(gap > 0) || !(next_gap > 0)) throw InvalidArgument("m_matrix: nonpositive gap");
  const T xi = 2 * gap * next_gap;
  return TransformMatrix<T>(T(0), T(1) / xi, T(0), -xi, 4 * next_gap * next_gap / xi, T(0));
}

// Constrained-branch map; its x-row is the reflection x -> 1 - x.
template <Scalar T>
TransformMatrix<T> l_matrix(const T& gap, const T& next_gap) {
  if (!(gap > 0) || !(next_gap > 0)) throw InvalidArgument("l_matrix: nonpositive gap");
  const T xi = 2 * gap * next_gap;
  const T four = 4 * next_gap * next_gap;
  return TransformMatrix<T>(T(-1), T(0), T(1), -2 * xi - four, T(-1), xi + four);
}

// Image of the line y = slope x + intercept under `a`, as a line in the
// target plane. The intercept is formed from 2x2 minors of `a` so that the
// slope*intercept cross terms cancel symbolically instead of numerically.
template <Scalar T>
LinearPiece<T> map_line(const TransformMatrix<T>& a, const LinearPiece<T>& line) {
  const T& s = line.slope;
  const T& b = line.intercept;
  const T dx = a(0, 0) + a(0, 1) * s;
  const T dy = a(1, 0) + a(1, 1) * s;
  const T det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const T num = b * det + (a(0, 0) * a(1, 2) - a(1, 0) * a(0, 2)) +
                s * (a(0, 1) * a(1, 2) - a(1, 1) * a(0, 2));
  return {dy / dx, num / dx};
}

template <Scalar T>
struct LevelRecord {
  std::size_t level = 0;  // i + 1
  TransformMatrix<T> m;
  std::optional<TransformMatrix<T>> l;
  // (1 - w*, R_{i+1}(1 - w*)); present exactly when `l` is.
  std::optional<std::pair<T, T>> breakpoint;
};

template <Scalar T>
class ImplicitChain {
 public:
  ImplicitChain(Plf<T> base, ToleranceConfig<T> cfg)
      : base_(std::move(base)), cfg_(std::move(cfg)) {
    if (base_.num_pieces() != 2 || base_.level() != 2) {
      throw InvalidArgument("implicit chain: base must be the two-piece level-2 function");
    }
  }

  const Plf<T>& base() const { return base_; }
  const std::vector<LevelRecord<T>>& records() const { return records_; }
  std::size_t last_level() const { return records_.size() + 2; }

  // Appends the record for level last_level() + 1. Levels must be contiguous.
  void push_level(LevelRecord<T> record) {
    if (record.level != last_level() + 1) throw InvalidArgument("implicit chain: level gap");
    if (record.l.has_value() != record.breakpoint.has_value()) {
      throw InvalidArgument("implicit chain: L matrix and breakpoint must come together");
    }
    records_.push_back(std::move(record));
  }

  const LevelRecord<T>& record(std::size_t level) const {
    if (level < 3 || level > last_level()) throw InvalidArgument("implicit chain: no such level");
    return records_[level - 3];
  }

  // Op 1: R_level(x).
  T eval(std::size_t level, const T& x, OpCounter* counter = nullptr) const {
    if (x < 0) throw InvalidArgument("implicit eval: x < 0");
    bump(counter, &OpCounter::eval_queries);
    const LinearPiece<T> line =
        locate(level, [&](const T& px, const T&) { return three_way(x, px); }, counter);
    return line(x);
  }

  // Op 2: R_level^{-1}(y).
  T inverse(std::size_t level, const T& y, OpCounter* counter = nullptr) const {
    bump(counter, &OpCounter::inverse_queries);
    const LinearPiece<T> line =
        locate(level, [&](const T&, const T& py) { return three_way(y, py); }, counter);
    const T x = (y - line.intercept) / line.slope;
    if (x < 0) throw InvalidArgument("implicit inverse: below range");
    return x;
  }

  // Op 3: the x with x + R_level(x) / xi = 1.
  T solve_op3(std::size_t level, const T& xi, OpCounter* counter = nullptr) const {
    if (!(xi > 0)) throw InvalidArgument("implicit solve_op3: xi must be positive");
    bump(counter, &OpCounter::op3_queries);
    const T one(1);
    const LinearPiece<T> line = locate(
        level, [&](const T& px, const T& py) { return three_way(one, px + py / xi); }, counter);
    const T x = (xi - line.intercept) / (xi + line.slope);
    if (x < 0) throw InvalidArgument("implicit solve_op3: no root on [0, inf)");
    return x;
  }

 private:
  static int three_way(const T& a, const T& b) { return a < b ? -1 : (b < a ? 1 : 0); }

  // Returns the line through the piece of R_level that answers the query.
  //
  // `cmp(px, py)` orders the query against a graph point (px, py) of
  // R_level: positive when the answer lies to the right of px. Walking down
  // from `level`, the composed transform carries each stored breakpoint up
  // to level coordinates, and the comparison picks M or L there. The
  // composition reverses orientation after an odd number of L factors, which
  // flips the side of the breakpoint the answer's preimage is on.
  //
  // The composed transform is only used for these decisions. Its entries can
  // grow large enough to swamp a double, so the answer is built by carrying
  // the chosen piece of R_2 back up through the chosen maps one level at a
  // time, which is as well conditioned as the explicit construction.
  template <class Cmp>
  LinearPiece<T> locate(std::size_t level, Cmp cmp, OpCounter* counter) const {
    if (level < 2 || level > last_level()) {
      throw InvalidArgument("implicit chain: level out of range");
    }
    TransformMatrix<T> t;
    bool reversed = false;
    // At equality both sides agree; take the M / right-piece side.
    auto right_side = [&](int c) { return c == 0 || ((c > 0) != reversed); };

    std::vector<const TransformMatrix<T>*> chosen(level - 2);
    for (std::size_t j = level; j >= 3; --j) {
      const LevelRecord<T>& rec = records_[j - 3];
      const TransformMatrix<T>* a = &rec.m;
      if (rec.breakpoint) {
        const auto [px, py] = t.apply(rec.breakpoint->first, rec.breakpoint->second);
        bump(counter, &OpCounter::matrix_ops);
        if (!right_side(cmp(px, py))) {
          a = &*rec.l;
          reversed = !reversed;
        }
      }
      chosen[j - 3] = a;
      t = t * *a;
      bump(counter, &OpCounter::matrix_ops);
    }

    const auto [px, py] = t.apply(base_.starts()[1], base_.start_values()[1]);
    bump(counter, &OpCounter::matrix_ops);
    LinearPiece<T> line = base_.pieces()[right_side(cmp(px, py)) ? 1 : 0];
    for (const TransformMatrix<T>* a : chosen) {
      line = map_line(*a, line);
      bump(counter, &OpCounter::matrix_ops);
    }
    return line;
  }

  Plf<T> base_;
  ToleranceConfig<T> cfg_;
  std::vector<LevelRecord<T>> records_;
};

template <Scalar T>
ImplicitChain<T> build_implicit(const Instance<T>& inst,
                                const ToleranceConfig<T>& cfg = default_tolerance<T>(),
                                OpCounter* counter = nullptr) {
  if (inst.size() < 3) throw InvalidArgument("build_implicit: need at least 3 points");
  const auto gaps = inst.gaps();
  ImplicitChain<T> chain(make_r2(gaps[0], gaps[1], cfg), cfg);
  for (std::size_t level = 2; level + 1 <= gaps.size(); ++level) {
    const T& gap = gaps[level - 1];
    const T& next_gap = gaps[level];
    const T xi = 2 * gap * next_gap;
    LevelRecord<T> rec;
    rec.level = level + 1;
    rec.m = m_matrix(gap, next_gap);
    const T root = chain.inverse(level, T(0), counter);
    const bool unconstrained = root >= 1 || (!is_exact_v<T> && approx_eq(root, T(1), cfg));
    if (!unconstrained) {
      const T w_star = chain.solve_op3(level, xi, counter);
      const T bx = 1 - w_star;
      const T by = 4 * next_gap * next_gap * bx - xi * chain.inverse(level, xi * bx, counter);
      rec.l = l_matrix(gap, next_gap);
      rec.breakpoint = std::make_pair(bx, by);
    }
    chain.push_level(std::move(rec));
  }
  return chain;
}

}  // namespace dks1d

#endif  // DKS1D_IMPLICIT_CHAIN_HPP_
