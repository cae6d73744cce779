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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "dks1d/errors.hpp"
#include "dks1d/instance.hpp"
#include "test_support.hpp"

using dks1d::Instance;
using dks1d::Rational;

namespace {

std::vector<double> dv(std::initializer_list<double> xs) { return std::vector<double>(xs); }

}  // namespace

TEST_CASE("build_instance derives gaps and couplings") {
  const auto inst = dks1d::build_instance<double>({0, 1, 1.5, 2.5});
  CHECK(std::vector<double>(inst.gaps().begin(), inst.gaps().end()) == dv({1, 0.5, 1}));
  CHECK(std::vector<double>(inst.couplings().begin(), inst.couplings().end()) == dv({1, 1}));
  CHECK(inst.size() == 4);
  CHECK(inst.num_weights() == 3);
  CHECK(inst.gap(2) == 0.5);
  CHECK(inst.coupling(2) == 1);

  const auto two = dks1d::build_instance<double>({0, 1});
  CHECK(two.gaps().size() == 1);
  CHECK(two.couplings().empty());

  const auto sorted = dks1d::build_instance<double>({3, 1, 2});
  CHECK(std::vector<double>(sorted.gaps().begin(), sorted.gaps().end()) == dv({1, 1}));
}

TEST_CASE("build_instance rejects degenerate input") {
  CHECK_THROWS_WITH_AS(dks1d::build_instance<double>({0, 1, 1}), "degenerate gap",
                       dks1d::InvalidArgument);
  CHECK_THROWS_AS(dks1d::build_instance<double>({4}), dks1d::InvalidArgument);
  CHECK_THROWS_AS(Instance<double>(dv({1, 0})), dks1d::InvalidArgument);
  CHECK_THROWS_AS(Instance<double>(dv({1, -2})), dks1d::InvalidArgument);
}

TEST_CASE("compute_q") {
  const Instance<double> ex(dv({1, 0.5, 1}));
  CHECK(dks1d::compute_q<double>(ex, dv({1, 2, 1})) == 2);
  CHECK(dks1d::compute_q<double>(Instance<double>(dv({1})), dv({1})) == 2);
  CHECK(dks1d::compute_q<double>(Instance<double>(dv({1, 1})), dv({1, 1})) == 2);
  // v = (5, 5, 10)
  CHECK(dks1d::compute_q<double>(Instance<double>(dv({1, 10})), dv({5, 1})) == 150);
  CHECK_THROWS_AS(dks1d::compute_q<double>(ex, dv({1, 2})), dks1d::InvalidArgument);
}

TEST_CASE("compute_q matches the residual sum computed by hand") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto gaps = dks1d::testing::int_gaps(rng, 6);
    const auto inst = dks1d::testing::make_instance<double>(gaps);
    std::vector<double> w(6);
    for (double& x : w) x = u(rng);
    double q = 0;
    double prev = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      const double cur = w[i] * static_cast<double>(gaps[i]);
      q += (cur - prev) * (cur - prev);
      prev = cur;
    }
    q += prev * prev;
    CHECK(dks1d::testing::rel_diff(dks1d::compute_q<double>(inst, w), q) < 1e-14);
  }
}

TEST_CASE("is_feasible") {
  CHECK(dks1d::is_feasible<double>(Instance<double>(dv({1, 0.5, 1})), dv({1, 2, 1})));
  // Only w_2 + w_3 is constrained among pairs when n = 4.
  CHECK(dks1d::is_feasible<double>(Instance<double>(dv({1, 1, 1})), dv({1, 0, 1})));
  CHECK_FALSE(dks1d::is_feasible<double>(Instance<double>(dv({1, 1})), dv({0.5, 1})));
  CHECK_FALSE(dks1d::is_feasible<double>(Instance<double>(dv({1, 1, 1, 1})), dv({1, 0.2, 0.3, 1})));
  CHECK_THROWS_AS(dks1d::is_feasible<double>(Instance<double>(dv({1, 1})), dv({1})),
                  dks1d::InvalidArgument);
}

TEST_CASE("constraint list") {
  const auto c2 = dks1d::consecutive_constraints(1);
  REQUIRE(c2.size() == 1);
  CHECK_FALSE(c2[0].is_pair);
  const auto c5 = dks1d::consecutive_constraints(4);
  REQUIRE(c5.size() == 4);
  CHECK(c5[0].first == 0);
  CHECK(c5[1].is_pair);
  CHECK(c5[1].first == 1);
  CHECK(c5[1].second == 2);
  CHECK(c5[2].first == 2);
  CHECK(c5[2].second == 3);
  CHECK(c5[3].first == 3);
  CHECK_FALSE(c5[3].is_pair);
}

TEST_CASE("gradient_q") {
  const Instance<double> inst(dv({1, 1}));
  CHECK(dks1d::gradient_q<double>(inst, dv({1, 1})) == dv({2, 2}));
  CHECK(dks1d::gradient_q<double>(inst, dv({0, 0})) == dv({0, 0}));
}

TEST_CASE("check_kkt") {
  const auto cfg = dks1d::default_tolerance<Rational>();
  const auto ex = dks1d::testing::ratio_instance<Rational>({{1, 1}, {1, 2}, {1, 1}});
  const std::vector<Rational> opt{1, 2, 1};
  const auto cert = dks1d::check_kkt<Rational>(ex, opt, cfg);
  CHECK(cert.valid(cfg));
  CHECK(cert.stationarity_residual == 0);

  const auto pair = dks1d::testing::ratio_instance<Rational>({{1, 1}, {1, 1}});
  CHECK(dks1d::check_kkt<Rational>(pair, std::vector<Rational>{1, 1}, cfg).valid(cfg));

  const std::vector<Rational> worse{1, 1, 1};
  CHECK_FALSE(dks1d::check_kkt<Rational>(ex, worse, cfg).valid(cfg));

  const std::vector<Rational> infeasible{Rational(1, 2), 1};
  CHECK_THROWS_AS(dks1d::check_kkt<Rational>(pair, infeasible, cfg), dks1d::InvalidArgument);
}

TEST_CASE("a valid certificate forces zero gradient where all constraints are slack") {
  // gaps (1, 10): optimum (5, 1). Constraint w_1 >= 1 is slack, so dQ/dw_1 = 0.
  const auto cfg = dks1d::default_tolerance<Rational>();
  const auto inst = dks1d::testing::ratio_instance<Rational>({{1, 1}, {10, 1}});
  const std::vector<Rational> w{5, 1};
  REQUIRE(dks1d::check_kkt<Rational>(inst, w, cfg).valid(cfg));
  CHECK(dks1d::gradient_q<Rational>(inst, w)[0] == 0);
}

TEST_CASE("redistribute_weight") {
  const std::vector<Rational> pts{0, 1, 2};
  dks1d::SymmetricWeights<Rational> w(3);
  w.set(0, 2, Rational(1));
  const auto moved = dks1d::redistribute_weight<Rational>(pts, w, 0, 1, 2);
  CHECK(moved(0, 1) == 2);
  CHECK(moved(1, 2) == 2);
  CHECK(moved(0, 2) == 0);
  CHECK(dks1d::compute_q_allpairs<Rational>(pts, moved) ==
        dks1d::compute_q_allpairs<Rational>(pts, w));

  const std::vector<Rational> pts2{0, 1, 3};
  const auto moved2 = dks1d::redistribute_weight<Rational>(pts2, w, 0, 1, 2);
  CHECK(moved2(0, 1) == 3);
  CHECK(moved2(1, 2) == Rational(3, 2));
  for (std::size_t i = 0; i < 3; ++i) CHECK(moved2.row_sum(i) >= w.row_sum(i));

  dks1d::SymmetricWeights<Rational> empty(3);
  CHECK_THROWS_AS(dks1d::redistribute_weight<Rational>(pts, empty, 0, 1, 2),
                  dks1d::InvalidArgument);
  CHECK_THROWS_AS(dks1d::redistribute_weight<Rational>(pts, w, 1, 0, 2),
                  dks1d::InvalidArgument);
}

TEST_CASE("redistribution preserves Q on random triples") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(1, 40);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> pts{0};
    for (int k = 0; k < 4; ++k) pts.push_back(pts.back() + Rational(num(rng), num(rng)));
    dks1d::SymmetricWeights<Rational> w(5);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) w.set(i, j, Rational(num(rng), 7));
    }
    std::size_t idx[3];
    std::vector<std::size_t> all{0, 1, 2, 3, 4};
    std::shuffle(all.begin(), all.end(), rng);
    std::copy(all.begin(), all.begin() + 3, idx);
    std::sort(idx, idx + 3);
    const auto moved = dks1d::redistribute_weight<Rational>(pts, w, idx[0], idx[1], idx[2]);
    CHECK(dks1d::compute_q_allpairs<Rational>(pts, moved) ==
          dks1d::compute_q_allpairs<Rational>(pts, w));
  }
}
