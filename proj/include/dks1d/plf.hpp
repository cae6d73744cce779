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

#ifndef DKS1D_PLF_HPP_
#define DKS1D_PLF_HPP_

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "dks1d/counters.hpp"
#include "dks1d/errors.hpp"
#include "dks1d/numerics.hpp"

namespace dks1d {

template <Scalar T>
struct LinearPiece {
  T slope;
  T intercept;

  T operator()(const T& x) const { return slope * x + intercept; }
  bool operator==(const LinearPiece&) const = default;
};

// A strictly increasing continuous piecewise-linear function on [0, inf).
//
// Piece k covers [start(k), start(k+1)), with start(0) = 0 and the last piece
// unbounded. A breakpoint belongs to the piece on its right, so lookups by x
// follow the right-derivative convention. The value at each start is cached
// so that inversion and the fixed-point query are a binary search plus one
// division.
template <Scalar T>
class Plf {
 public:
  explicit Plf(int level = 0, ToleranceConfig<T> cfg = default_tolerance<T>())
      : level_(level), cfg_(std::move(cfg)) {}

  int level() const { return level_; }
  std::size_t num_pieces() const { return pieces_.size(); }
  bool empty() const { return pieces_.empty(); }

  std::span<const T> starts() const { return starts_; }
  std::span<const T> start_values() const { return start_values_; }
  std::span<const LinearPiece<T>> pieces() const { return pieces_; }
  // Interior breakpoints (starts without the leading 0).
  std::span<const T> breakpoints() const {
    return starts_.empty() ? std::span<const T>() : std::span<const T>(starts_).subspan(1);
  }

  // Extends the function with `piece` on [from_x, inf). The first piece must
  // start at 0. A piece collinear with the last one is absorbed without
  // storing a breakpoint.
  void append(const LinearPiece<T>& piece, const T& from_x) {
    if (!(piece.slope > 0)) throw InvalidArgument("plf: piece slope must be positive");
    if (pieces_.empty()) {
      if (from_x != 0) throw InvalidArgument("plf: first piece must start at 0");
      push(piece, from_x);
      return;
    }
    if (!(from_x > starts_.back())) {
      // Zero-length leftovers of rounding in the float backend replace the
      // previous piece instead of creating an empty one.
      if (is_exact_v<T> || !approx_eq(from_x, starts_.back(), cfg_)) {
        throw InvalidArgument("plf: breakpoints must increase");
      }
      pop();
      if (pieces_.empty()) {
        push(piece, T(0));
        return;
      }
    }
    const LinearPiece<T>& last = pieces_.back();
    if (!continuous(last, piece, from_x)) {
      throw InvalidArgument("plf: discontinuity at appended breakpoint");
    }
    if (approx_eq(last.slope, piece.slope, cfg_) &&
        approx_eq(last.intercept, piece.intercept, cfg_)) {
      return;
    }
    push(piece, from_x);
  }

  // Index of the piece containing x (right convention at breakpoints).
  std::size_t piece_index(const T& x) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), x);
    return static_cast<std::size_t>(it - starts_.begin()) - 1;
  }

  T eval(const T& x, OpCounter* counter = nullptr) const {
    require_built();
    if (x < 0) throw InvalidArgument("plf eval: x < 0");
    bump(counter, &OpCounter::eval_queries);
    return pieces_[piece_index(x)](x);
  }

  T right_slope(const T& x) const {
    require_built();
    if (x < 0) throw InvalidArgument("plf right_slope: x < 0");
    return pieces_[piece_index(x)].slope;
  }

  T value_at_zero() const {
    require_built();
    return start_values_.front();
  }

  // The unique x >= 0 with f(x) = y.
  T inverse(const T& y, OpCounter* counter = nullptr) const {
    require_built();
    if (y < start_values_.front()) throw InvalidArgument("plf inverse: below range");
    bump(counter, &OpCounter::inverse_queries);
    auto it = std::upper_bound(start_values_.begin(), start_values_.end(), y);
    const std::size_t k = static_cast<std::size_t>(it - start_values_.begin()) - 1;
    const LinearPiece<T>& p = pieces_[k];
    return clamp_to_piece(k, (y - p.intercept) / p.slope);
  }

  // The unique x with x + f(x) / xi = 1. The left side is strictly
  // increasing in x, so the containing piece is found by bisection on the
  // cached start values.
  T solve_op3(const T& xi, OpCounter* counter = nullptr) const {
    require_built();
    if (!(xi > 0)) throw InvalidArgument("plf solve_op3: xi must be positive");
    if (start_values_.front() / xi > 1) {
      throw InvalidArgument("plf solve_op3: no root on [0, inf)");
    }
    bump(counter, &OpCounter::op3_queries);
    std::size_t lo = 0;
    std::size_t hi = starts_.size();
    // Invariant: g(start[lo]) <= 1, and g(start[hi]) > 1 when hi < size.
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (starts_[mid] + start_values_[mid] / xi <= 1) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const LinearPiece<T>& p = pieces_[lo];
    return clamp_to_piece(lo, (xi - p.intercept) / (xi + p.slope));
  }

  void dump(std::ostream& os) const {
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      os << format_scalar(starts_[k]) << ' ' << format_scalar(pieces_[k].slope) << ' '
         << format_scalar(pieces_[k].intercept) << '\n';
    }
  }

 private:
  void require_built() const {
    if (pieces_.empty()) throw InvalidArgument("plf: empty function");
  }

  void push(const LinearPiece<T>& piece, const T& from_x) {
    starts_.push_back(from_x);
    start_values_.push_back(piece(from_x));
    pieces_.push_back(piece);
  }

  void pop() {
    starts_.pop_back();
    start_values_.pop_back();
    pieces_.pop_back();
  }

  bool continuous(const LinearPiece<T>& a, const LinearPiece<T>& b, const T& x) const {
    const T va = a(x);
    const T vb = b(x);
    if (va == vb) return true;
    if constexpr (is_exact_v<T>) {
      return false;
    } else {
      // Compare against the magnitude of the terms that were summed, not the
      // (possibly cancelled) result.
      const T scale = std::max({std::abs(a.slope * x), std::abs(a.intercept),
                                std::abs(b.slope * x), std::abs(b.intercept)});
      return std::abs(va - vb) <= std::max(cfg_.abs_eps, kContinuitySlack * cfg_.rel_eps * scale);
    }
  }

  T clamp_to_piece(std::size_t k, T x) const {
    if (x < starts_[k]) return starts_[k];
    if (k + 1 < starts_.size() && x > starts_[k + 1]) return starts_[k + 1];
    return x;
  }

  // Rounding in a piece's slope and intercept is a few ulps of the terms that
  // produced them; continuity is checked with this much headroom over rel_eps.
  static constexpr double kContinuitySlack = 1e3;

  int level_;
  ToleranceConfig<T> cfg_;
  std::vector<T> starts_;
  std::vector<T> start_values_;
  std::vector<LinearPiece<T>> pieces_;
};

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Plf<T>& f) {
  f.dump(os);
  return os;
}

// The level-2 function:
//   4 d2^2 x - 2 d1 d2  on [0, 2 d1 / d2),
//   3 d2^2 x            on [2 d1 / d2, inf).
template <Scalar T>
Plf<T> make_r2(const T& d1, const T& d2, ToleranceConfig<T> cfg = default_tolerance<T>()) {
  if (!(d1 > 0) || !(d2 > 0)) throw InvalidArgument("make_r2: nonpositive gap");
  Plf<T> f(2, std::move(cfg));
  const T d2sq = d2 * d2;
  f.append({4 * d2sq, -2 * d1 * d2}, T(0));
  f.append({3 * d2sq, T(0)}, 2 * d1 / d2);
  return f;
}

}  // namespace dks1d

#endif  // DKS1D_PLF_HPP_
