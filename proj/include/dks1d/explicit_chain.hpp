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

// Explicit construction of the derivative functions R_2, ..., R_{n-1}.
//
// R_i is the derivative of the best achievable partial objective as a
// function of the last weight w_i. Given R_i, gaps d = d_i, d' = d_{i+1} and
// xi = 2 d d', the next function is
//
//   R_{i+1}(x) = 4 d'^2 x - xi R_i^{-1}(xi x)                    (upper)
//
// whenever the pair constraint w_i + w_{i+1} >= 1 is slack at the inner
// optimum. If R_i^{-1}(0) < 1 the constraint binds for small x: with w* the
// root of x + R_i(x)/xi = 1,
//
//   R_{i+1}(x) = -R_i(1 - x) + (2 xi + 4 d'^2) x - xi    for x < 1 - w*,
//
// and the upper form applies for x >= 1 - w*. Both forms are linear on each
// piece of R_i, so R_{i+1} is assembled piece by piece.

#ifndef DKS1D_EXPLICIT_CHAIN_HPP_
#define DKS1D_EXPLICIT_CHAIN_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dks1d/errors.hpp"
#include "dks1d/instance.hpp"
#include "dks1d/numerics.hpp"
#include "dks1d/plf.hpp"

namespace dks1d {

// Slope of R_i for large arguments, (2 + 2/i) d_i^2. Also a lower bound on
// every slope of R_i.
template <Scalar T>
T asymptotic_slope(int level, const T& gap) {
  return (T(2) + T(2) / T(level)) * gap * gap;
}

// Which branch produced a level; Case 2 levels carry a breakpoint at
// 1 - w*.
template <Scalar T>
struct ExtendInfo {
  T unconstrained_root;             // R_i^{-1}(0)
  std::optional<T> constrained_root;  // w*, Case 2 only
};

// Builds R_{i+1} from R_i. `gap` is d_i and `next_gap` is d_{i+1}.
template <Scalar T>
Plf<T> extend(const Plf<T>& r, const T& gap, const T& next_gap,
              const ToleranceConfig<T>& cfg = default_tolerance<T>(),
              ExtendInfo<T>* info = nullptr, OpCounter* counter = nullptr) {
  if (!(gap > 0) || !(next_gap > 0)) throw InvalidArgument("extend: nonpositive gap");
  const T xi = 2 * gap * next_gap;
  const T four = 4 * next_gap * next_gap;
  const T xi_sq = xi * xi;
  const auto starts = r.starts();
  const auto values = r.start_values();
  const auto pieces = r.pieces();

  Plf<T> next(r.level() + 1, cfg);

  auto upper = [&](std::size_t k_from, const T& x_from) {
    for (std::size_t k = k_from; k < pieces.size(); ++k) {
      const LinearPiece<T>& p = pieces[k];
      LinearPiece<T> q{four - xi_sq / p.slope, xi * p.intercept / p.slope};
      next.append(q, k == k_from ? x_from : values[k] / xi);
    }
  };

  const T root = r.inverse(T(0), counter);
  if (info != nullptr) {
    info->unconstrained_root = root;
    info->constrained_root.reset();
  }
  try {
    if (root >= 1 || (!is_exact_v<T> && approx_eq(root, T(1), cfg))) {
      upper(r.piece_index(root), T(0));
    } else {
      const T w_star = r.solve_op3(xi, counter);
      if (info != nullptr) info->constrained_root = w_star;
      const T one(1);
      // Pieces of R_i over (w*, 1], walked from t = 1 downward; x = 1 - t.
      const auto first_at_one =
          static_cast<std::size_t>(std::lower_bound(starts.begin(), starts.end(), one) -
                                   starts.begin());
      const std::size_t k_hi = first_at_one - 1;
      const std::size_t k_lo = r.piece_index(w_star);
      if (k_lo > k_hi) throw InvariantViolation("extend: constrained root beyond 1");
      const T lower_slope_shift = 2 * xi + four;
      for (std::size_t k = k_hi + 1; k-- > k_lo;) {
        const LinearPiece<T>& p = pieces[k];
        LinearPiece<T> q{p.slope + lower_slope_shift, -p.slope - p.intercept - xi};
        T x_from(0);
        if (k + 1 < starts.size() && starts[k + 1] < one) x_from = one - starts[k + 1];
        next.append(q, x_from);
      }
      upper(k_lo, one - w_star);
    }
  } catch (const InvalidArgument& e) {
    throw InvariantViolation(std::string("extend: ") + e.what());
  }

  if (next.num_pieces() > 2 * r.num_pieces()) {
    throw InvariantViolation("extend: piece count more than doubled");
  }
  return next;
}

// Checks the structural properties every R_i has: negative at 0, slopes at
// least the asymptotic slope, final piece exactly the asymptotic line, and
// continuity with strictly increasing values at every stored breakpoint.
// Returns a description of the first violation.
template <Scalar T>
std::optional<std::string> level_invariant_violation(
    const Plf<T>& f, const T& gap, const ToleranceConfig<T>& cfg = default_tolerance<T>()) {
  if (f.empty()) return "empty function";
  if (!(f.value_at_zero() < 0)) return "value at 0 is not negative";
  // Equality up to rounding in the terms of a sum of magnitude `mag`.
  auto close = [&](const T& a, const T& b, const T& mag) {
    if (a == b) return true;
    T tol = T(1000) * cfg.rel_eps * mag;
    if (cfg.abs_eps > tol) tol = cfg.abs_eps;
    return scalar_abs<T>(a - b) <= tol;
  };
  const T bound = asymptotic_slope(f.level(), gap);
  const auto pieces = f.pieces();
  const auto starts = f.starts();
  const auto values = f.start_values();
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (!approx_ge(pieces[k].slope, bound, cfg)) {
      return "piece " + std::to_string(k) + " slope below (2 + 2/i) d_i^2";
    }
    if (k == 0) continue;
    if (!(starts[k] > starts[k - 1]) || !(values[k] > values[k - 1])) {
      return "breakpoints or values not increasing at piece " + std::to_string(k);
    }
    const LinearPiece<T>& left = pieces[k - 1];
    const T mag = scalar_abs<T>(left.slope * starts[k]) + scalar_abs<T>(left.intercept);
    if (!close(left(starts[k]), values[k], mag)) {
      return "discontinuity at breakpoint " + std::to_string(k);
    }
  }
  const LinearPiece<T>& last = pieces.back();
  if (!approx_eq(last.slope, bound, cfg)) return "final slope differs from (2 + 2/i) d_i^2";
  if (!close(last.intercept, T(0), bound * starts.back())) {
    return "final piece does not pass through the origin";
  }
  return std::nullopt;
}

template <Scalar T>
class ExplicitChain {
 public:
  ExplicitChain() = default;
  ExplicitChain(std::vector<Plf<T>> functions, std::vector<ExtendInfo<T>> infos)
      : functions_(std::move(functions)), infos_(std::move(infos)) {
    for (const auto& f : functions_) max_pieces_ = std::max(max_pieces_, f.num_pieces());
  }

  // R_level for 2 <= level <= n-1.
  const Plf<T>& function(std::size_t level) const {
    if (level < 2 || level - 2 >= functions_.size()) {
      throw InvalidArgument("explicit chain: level out of range");
    }
    return functions_[level - 2];
  }
  // Branch data used to build R_level from R_{level-1}; level >= 3.
  const ExtendInfo<T>& extend_info(std::size_t level) const {
    if (level < 3 || level - 3 >= infos_.size()) {
      throw InvalidArgument("explicit chain: level out of range");
    }
    return infos_[level - 3];
  }
  std::size_t first_level() const { return 2; }
  std::size_t last_level() const { return functions_.size() + 1; }
  std::size_t num_levels() const { return functions_.size(); }
  std::size_t max_pieces() const { return max_pieces_; }

 private:
  std::vector<Plf<T>> functions_;
  std::vector<ExtendInfo<T>> infos_;
  std::size_t max_pieces_ = 0;
};

template <Scalar T>
ExplicitChain<T> build_chain(const Instance<T>& inst,
                             const ToleranceConfig<T>& cfg = default_tolerance<T>(),
                             OpCounter* counter = nullptr) {
  if (inst.size() < 3) throw InvalidArgument("build_chain: need at least 3 points");
  const auto gaps = inst.gaps();
  std::vector<Plf<T>> functions;
  std::vector<ExtendInfo<T>> infos;
  functions.reserve(gaps.size() - 1);
  infos.reserve(gaps.size() >= 2 ? gaps.size() - 2 : 0);
  functions.push_back(make_r2(gaps[0], gaps[1], cfg));
  // Level i (1-based) uses d_i and d_{i+1}; gaps[] is 0-based.
  for (std::size_t level = 2; level + 1 <= gaps.size(); ++level) {
    ExtendInfo<T> info;
    functions.push_back(
        extend(functions.back(), gaps[level - 1], gaps[level], cfg, &info, counter));
    infos.push_back(std::move(info));
  }
  return ExplicitChain<T>(std::move(functions), std::move(infos));
}

}  // namespace dks1d

#endif  // DKS1D_EXPLICIT_CHAIN_HPP_
