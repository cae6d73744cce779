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

// Problem data for fitting consecutive-edge weights to points on a line.
//
// With sorted points p_1 < ... < p_n, gaps d_i = p_{i+1} - p_i and weights
// w_i on edge (i, i+1), the objective is
//
//   Q(w) = (w_1 d_1)^2 + sum_{i=2}^{n-1} (w_i d_i - w_{i-1} d_{i-1})^2
//          + (w_{n-1} d_{n-1})^2
//
// subject to w_1 >= 1, w_{n-1} >= 1 and w_j + w_{j+1} >= 1 for
// 2 <= j <= n-2. The pair constraint for j = 1 is implied by w_1 >= 1 and is
// not listed. Indices in this file are 0-based unless a comment says
// otherwise.

#ifndef DKS1D_INSTANCE_HPP_
#define DKS1D_INSTANCE_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dks1d/errors.hpp"
#include "dks1d/numerics.hpp"

namespace dks1d {

template <Scalar T>
using PointSet = std::vector<T>;

template <Scalar T>
using WeightVector = std::vector<T>;

template <Scalar T>
class Instance {
 public:
  Instance() = default;

  // Gaps must all be positive. Couplings 2 d_i d_{i+1} are derived.
  explicit Instance(std::vector<T> gaps) : gaps_(std::move(gaps)) {
    for (const T& d : gaps_) {
      if (!(d > 0)) throw InvalidArgument("degenerate gap");
    }
    if (gaps_.size() >= 2) {
      couplings_.reserve(gaps_.size() - 1);
      for (std::size_t i = 0; i + 1 < gaps_.size(); ++i) {
        couplings_.push_back(2 * gaps_[i] * gaps_[i + 1]);
      }
    }
  }

  // Number of points.
  std::size_t size() const { return gaps_.empty() ? 0 : gaps_.size() + 1; }
  std::size_t num_weights() const { return gaps_.size(); }

  std::span<const T> gaps() const { return gaps_; }
  std::span<const T> couplings() const { return couplings_; }

  // 1-based accessors matching the usual d_i / xi_i notation.
  const T& gap(std::size_t i) const { return gaps_[i - 1]; }
  const T& coupling(std::size_t i) const { return couplings_[i - 1]; }

 private:
  std::vector<T> gaps_;
  std::vector<T> couplings_;
};

// Sorts the points and derives gaps. Coincident points are rejected.
template <Scalar T>
Instance<T> build_instance(PointSet<T> points) {
  if (points.size() < 2) throw InvalidArgument("need at least 2 points");
  std::sort(points.begin(), points.end());
  std::vector<T> gaps;
  gaps.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    T d = points[i + 1] - points[i];
    if (!(d > 0)) throw InvalidArgument("degenerate gap");
    gaps.push_back(std::move(d));
  }
  return Instance<T>(std::move(gaps));
}

template <Scalar T>
PointSet<T> points_from_gaps(std::span<const T> gaps, const T& origin = T(0)) {
  PointSet<T> points;
  points.reserve(gaps.size() + 1);
  points.push_back(origin);
  for (const T& d : gaps) points.push_back(points.back() + d);
  return points;
}

namespace detail {

template <Scalar T>
void check_length(const Instance<T>& inst, std::span<const T> w) {
  if (w.size() != inst.num_weights()) {
    throw InvalidArgument("weight vector length " + std::to_string(w.size()) +
                          " does not match " + std::to_string(inst.num_weights()));
  }
}

// Signed point residuals v_1..v_n: v_i = d_i w_i - d_{i-1} w_{i-1}, with the
// out-of-range terms taken as zero. |v_i| is the per-point residual length.
template <Scalar T>
std::vector<T> point_residuals(const Instance<T>& inst, std::span<const T> w) {
  const auto gaps = inst.gaps();
  const std::size_t m = w.size();
  std::vector<T> v(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    T value(0);
    if (i < m) value += gaps[i] * w[i];
    if (i > 0) value -= gaps[i - 1] * w[i - 1];
    v[i] = std::move(value);
  }
  return v;
}

}  // namespace detail

template <Scalar T>
T compute_q(const Instance<T>& inst, std::span<const T> w) {
  detail::check_length(inst, w);
  T q(0);
  for (const T& v : detail::point_residuals(inst, w)) q += v * v;
  return q;
}

// dQ/dw_j = 2 d_j (v_j - v_{j+1}).
template <Scalar T>
std::vector<T> gradient_q(const Instance<T>& inst, std::span<const T> w) {
  detail::check_length(inst, w);
  const auto v = detail::point_residuals(inst, w);
  const auto gaps = inst.gaps();
  std::vector<T> g(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) g[j] = 2 * gaps[j] * (v[j] - v[j + 1]);
  return g;
}

// One linear constraint w_first (+ w_second) >= 1.
struct Constraint {
  std::size_t first;
  std::size_t second;
  bool is_pair;
};

// Constraint list in the order w_1 >= 1, pairs j = 2..n-2, w_{n-1} >= 1.
// With a single weight (n = 2) the two bound constraints coincide and only
// one is listed.
inline std::vector<Constraint> consecutive_constraints(std::size_t num_weights) {
  std::vector<Constraint> cs;
  if (num_weights == 0) return cs;
  cs.push_back({0, 0, false});
  for (std::size_t j = 1; j + 2 <= num_weights; ++j) cs.push_back({j, j + 1, true});
  if (num_weights >= 2) cs.push_back({num_weights - 1, num_weights - 1, false});
  return cs;
}

template <Scalar T>
T constraint_slack(const Constraint& c, std::span<const T> w) {
  T lhs = w[c.first];
  if (c.is_pair) lhs += w[c.second];
  return lhs - 1;
}

template <Scalar T>
bool is_feasible(const Instance<T>& inst, std::span<const T> w,
                 const ToleranceConfig<T>& cfg = default_tolerance<T>()) {
  detail::check_length(inst, w);
  for (const T& x : w) {
    if (x < -cfg.abs_eps) return false;
  }
  for (const Constraint& c : consecutive_constraints(w.size())) {
    if (constraint_slack(c, w) < -cfg.abs_eps) return false;
  }
  return true;
}

template <Scalar T>
struct KKTCertificate {
  // One multiplier per entry of consecutive_constraints(), zero when inactive.
  std::vector<T> multipliers;
  T stationarity_residual{0};
  T max_complementarity_violation{0};
  T min_multiplier{0};
  T gradient_norm{0};

  // Thresholds scale with max(1, |grad Q|_inf) in the float backend so the
  // check is invariant to the units of the gaps. Exact mode demands zeros.
  bool valid(const ToleranceConfig<T>& cfg) const {
    T scale = gradient_norm > 1 ? gradient_norm : T(1);
    T tol = cfg.rel_eps * scale;
    if (cfg.abs_eps > tol) tol = cfg.abs_eps;
    return !(min_multiplier < -tol) && !(stationarity_residual > tol) &&
           !(max_complementarity_violation > tol);
  }
};

// Certifies optimality of a feasible w. Each weight index owns exactly one
// constraint (w_1 >= 1 owns index 1, the pair j owns index j, w_{n-1} >= 1
// owns n-1), so the multipliers follow from forward substitution along the
// stationarity equations grad Q = sum_c lambda_c grad c. Inactive constraints
// are pinned to zero and the mismatch is reported as a residual.
template <Scalar T>
KKTCertificate<T> check_kkt(const Instance<T>& inst, std::span<const T> w,
                            const ToleranceConfig<T>& cfg = default_tolerance<T>()) {
  detail::check_length(inst, w);
  if (!is_feasible(inst, w, cfg)) throw InvalidArgument("check_kkt: infeasible weights");

  const auto g = gradient_q(inst, w);
  const auto cs = consecutive_constraints(w.size());
  T active_threshold = cfg.abs_eps > cfg.rel_eps ? cfg.abs_eps : cfg.rel_eps;

  KKTCertificate<T> cert;
  cert.multipliers.assign(cs.size(), T(0));
  for (const T& gj : g) {
    T a = scalar_abs<T>(gj);
    if (a > cert.gradient_norm) cert.gradient_norm = a;
  }

  // carry[j]: contribution already assigned to coordinate j by pairs owned
  // by earlier coordinates.
  std::vector<T> carry(w.size(), T(0));
  bool first = true;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const Constraint& c = cs[k];
    const std::size_t j = c.first;
    const T slack = constraint_slack(c, w);
    T lambda(0);
    if (!(slack > active_threshold)) {
      lambda = g[j] - carry[j];
    } else {
      T r = scalar_abs<T>(g[j] - carry[j]);
      if (r > cert.stationarity_residual) cert.stationarity_residual = r;
    }
    if (c.is_pair) carry[c.second] += lambda;
    T comp = scalar_abs<T>(lambda * slack);
    if (comp > cert.max_complementarity_violation) cert.max_complementarity_violation = comp;
    if (first || lambda < cert.min_multiplier) cert.min_multiplier = lambda;
    first = false;
    cert.multipliers[k] = std::move(lambda);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// All-pairs formulation, used to check that restricting to consecutive edges
// loses nothing.

template <Scalar T>
class SymmetricWeights {
 public:
  explicit SymmetricWeights(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  std::size_t size() const { return n_; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, T value) {
    if (i == j) throw InvalidArgument("diagonal weights must stay zero");
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = std::move(value);
  }
  T row_sum(std::size_t i) const {
    T s(0);
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j);
    return s;
  }

 private:
  std::size_t n_;
  std::vector<T> data_;
};

// Q = sum_i (sum_j w_ij (p_j - p_i))^2 over all pairs.
template <Scalar T>
T compute_q_allpairs(std::span<const T> points, const SymmetricWeights<T>& w) {
  if (points.size() != w.size()) throw InvalidArgument("points/weights size mismatch");
  T q(0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    T v(0);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) v += w(i, j) * (points[j] - points[i]);
    }
    q += v * v;
  }
  return q;
}

// Moves the weight of a long edge (i, k) onto the two edges (i, j), (j, k)
// through an intermediate point j. Every point residual is unchanged, so Q
// is preserved, and every row sum grows or stays the same. Indices refer to
// `points` in sorted order.
template <Scalar T>
SymmetricWeights<T> redistribute_weight(std::span<const T> points, SymmetricWeights<T> w,
                                        std::size_t i, std::size_t j, std::size_t k) {
  if (!(i < j && j < k) || k >= points.size() || w.size() != points.size()) {
    throw InvalidArgument("redistribute_weight: need i < j < k within range");
  }
  const T wik = w(i, k);
  if (!(wik > 0)) throw InvalidArgument("redistribute_weight: w_ik must be positive");
  const T a = points[j] - points[i];
  const T b = points[k] - points[j];
  if (!(a > 0) || !(b > 0)) throw InvalidArgument("redistribute_weight: points not sorted");
  w.set(i, j, w(i, j) + (a + b) / a * wik);
  w.set(j, k, w(j, k) + (a + b) / b * wik);
  w.set(i, k, T(0));
  return w;
}

}  // namespace dks1d

#endif  // DKS1D_INSTANCE_HPP_
