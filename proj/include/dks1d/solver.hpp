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

#ifndef DKS1D_SOLVER_HPP_
#define DKS1D_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

#include "dks1d/counters.hpp"
#include "dks1d/errors.hpp"
#include "dks1d/explicit_chain.hpp"
#include "dks1d/implicit_chain.hpp"
#include "dks1d/instance.hpp"
#include "dks1d/numerics.hpp"

namespace dks1d {

enum class Backend { kExplicit, kImplicit };

constexpr std::string_view backend_name(Backend b) {
  return b == Backend::kExplicit ? "explicit" : "implicit";
}

template <Scalar T>
struct SolveResult {
  WeightVector<T> weights;
  T q_value{0};
  KKTCertificate<T> certificate;
  Backend backend = Backend::kExplicit;
  std::optional<std::size_t> max_pieces;  // explicit backend only
  OpCounter counters;
  bool certificate_valid = false;
};

namespace detail {

// Recovers the weights from the chain, one inverse query per level:
//   w_{n-1} = max(R_{n-1}^{-1}(0), 1)
//   w_i     = max(R_i^{-1}(xi_i w_{i+1}), 1 - w_{i+1}),  2 <= i <= n-2
//   w_1     = max(d_2 / (2 d_1) w_2, 1)
// `inverse(level, y)` answers R_level^{-1}(y).
template <Scalar T, class Inverse>
WeightVector<T> back_substitute(const Instance<T>& inst, Inverse&& inverse) {
  const std::size_t m = inst.num_weights();  // n - 1
  WeightVector<T> w(m);
  auto max_of = [](T a, T b) { return a < b ? b : a; };
  // 1-based weight index i lives at w[i - 1].
  w[m - 1] = max_of(inverse(m, T(0)), T(1));
  for (std::size_t i = m - 1; i >= 2; --i) {
    const T& next = w[i];
    w[i - 1] = max_of(inverse(i, inst.coupling(i) * next), T(1) - next);
  }
  w[0] = max_of(inst.gap(2) / (2 * inst.gap(1)) * w[1], T(1));
  return w;
}

}  // namespace detail

// Optimal consecutive-edge weights for the instance, with Q and a KKT
// certificate computed in the same arithmetic.
template <Scalar T>
SolveResult<T> solve(const Instance<T>& inst, Backend backend = Backend::kExplicit,
                     const ToleranceConfig<T>& cfg = default_tolerance<T>()) {
  SolveResult<T> res;
  res.backend = backend;
  const std::size_t n = inst.size();
  if (n < 2) {
    // A single point has nothing to weight.
    res.certificate_valid = true;
    return res;
  }
  if (n == 2) {
    res.weights = {T(1)};
  } else if (backend == Backend::kExplicit) {
    const ExplicitChain<T> chain = build_chain(inst, cfg, &res.counters);
    res.max_pieces = chain.max_pieces();
    res.weights = detail::back_substitute(inst, [&](std::size_t level, const T& y) {
      return chain.function(level).inverse(y, &res.counters);
    });
  } else {
    const ImplicitChain<T> chain = build_implicit(inst, cfg, &res.counters);
    res.weights = detail::back_substitute(inst, [&](std::size_t level, const T& y) {
      return chain.inverse(level, y, &res.counters);
    });
  }
  res.q_value = compute_q<T>(inst, res.weights);
  res.certificate = check_kkt<T>(inst, res.weights, cfg);
  res.certificate_valid = res.certificate.valid(cfg);
  return res;
}

}  // namespace dks1d

#endif  // DKS1D_SOLVER_HPP_
