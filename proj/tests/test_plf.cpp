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
#include <cmath>
#include <random>
#include <sstream>

#include "dks1d/errors.hpp"
#include "dks1d/plf.hpp"

using dks1d::LinearPiece;
using dks1d::Plf;
using dks1d::Rational;

TEST_CASE("make_r2 for unit gaps") {
  const auto f = dks1d::make_r2<Rational>(1, 1);
  REQUIRE(f.num_pieces() == 2);
  CHECK(f.level() == 2);
  CHECK(f.pieces()[0] == LinearPiece<Rational>{4, -2});
  CHECK(f.pieces()[1] == LinearPiece<Rational>{3, 0});
  CHECK(f.breakpoints()[0] == 2);
  CHECK(f.value_at_zero() == -2);
}

TEST_CASE("make_r2 for gaps (1, 10)") {
  const auto f = dks1d::make_r2<Rational>(1, 10);
  CHECK(f.breakpoints()[0] == Rational(1, 5));
  CHECK(f.pieces()[0] == LinearPiece<Rational>{400, -20});
  CHECK(f.pieces()[1] == LinearPiece<Rational>{300, 0});
  CHECK_THROWS_AS(dks1d::make_r2<Rational>(0, 1), dks1d::InvalidArgument);
  CHECK_THROWS_AS(dks1d::make_r2<double>(1, -1), dks1d::InvalidArgument);
}

TEST_CASE("eval") {
  const auto f = dks1d::make_r2<Rational>(1, 1);
  CHECK(f.eval(2) == 6);
  CHECK(f.eval(0) == -2);
  CHECK(f.eval(10) == 30);
  CHECK_THROWS_AS(f.eval(-1), dks1d::InvalidArgument);
}

TEST_CASE("inverse") {
  const auto f = dks1d::make_r2<Rational>(1, 1);
  CHECK(f.inverse(0) == Rational(1, 2));
  CHECK(f.inverse(6) == 2);
  CHECK(f.inverse(-2) == 0);
  CHECK_THROWS_WITH_AS(f.inverse(-3), "plf inverse: below range", dks1d::InvalidArgument);
}

TEST_CASE("solve_op3") {
  const auto f = dks1d::make_r2<Rational>(1, 1);
  CHECK(f.solve_op3(2) == Rational(2, 3));
  const auto g = dks1d::make_r2<Rational>(1, 10);
  const Rational x = g.solve_op3(20);
  CHECK(x == Rational(2, 21));
  CHECK(x < Rational(1, 5));
  CHECK_THROWS_AS(f.solve_op3(0), dks1d::InvalidArgument);
}

TEST_CASE("solve_op3 root on a breakpoint") {
  // f(1) = 0 on both sides, so x + f(x)/xi = 1 at the breakpoint x = 1.
  Plf<Rational> f(2);
  f.append({2, -2}, 0);
  f.append({4, -4}, 1);
  CHECK(f.solve_op3(1) == 1);
  CHECK(f.solve_op3(Rational(7, 3)) == 1);
}

TEST_CASE("right_slope") {
  const auto f = dks1d::make_r2<Rational>(1, 1);
  CHECK(f.right_slope(0) == 4);
  CHECK(f.right_slope(2) == 3);
  CHECK(f.right_slope(1) == 4);
  CHECK_THROWS_AS(f.right_slope(-1), dks1d::InvalidArgument);
}

TEST_CASE("append and merge") {
  Plf<Rational> f(2);
  f.append({4, -2}, 0);
  f.append({3, 0}, 2);
  CHECK(f.num_pieces() == 2);
  CHECK(f.breakpoints().size() == 1);

  Plf<Rational> g(2);
  g.append({3, 0}, 0);
  g.append({3, 0}, 5);
  CHECK(g.num_pieces() == 1);
  CHECK(g.breakpoints().empty());

  Plf<Rational> h(2);
  h.append({4, -2}, 0);
  CHECK_THROWS_AS(h.append({2, 1}, 2), dks1d::InvalidArgument);
  CHECK_THROWS_AS(h.append({0, 6}, 2), dks1d::InvalidArgument);
  CHECK_THROWS_AS(h.append({-1, 8}, 2), dks1d::InvalidArgument);

  Plf<Rational> k(2);
  CHECK_THROWS_AS(k.append({1, 0}, 1), dks1d::InvalidArgument);
}

TEST_CASE("float merge absorbs rounding noise") {
  Plf<double> f(2);
  f.append({3.0, -1.0}, 0.0);
  f.append({3.0 * (1 + 1e-15), -1.0}, 1.0);
  CHECK(f.num_pieces() == 1);
}

TEST_CASE("dump format") {
  const auto f = dks1d::make_r2<Rational>(1, 1);
  std::ostringstream os;
  f.dump(os);
  CHECK(os.str() == "0 4 -2\n2 3 0\n");
}

TEST_CASE("eval and inverse are mutually inverse on R_2") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> gap(1, 50);
  std::uniform_int_distribution<int> num(0, 5000);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = dks1d::make_r2<Rational>(gap(rng), gap(rng));
    for (int s = 0; s < 10; ++s) {
      const Rational x(num(rng), 100);
      CHECK(f.inverse(f.eval(x)) == x);
      const Rational y = f.value_at_zero() + Rational(num(rng), 7);
      CHECK(f.eval(f.inverse(y)) == y);
    }
  }
}

TEST_CASE("float eval/inverse round trip within rel_eps") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> gap(1, 50);
  std::uniform_real_distribution<double> xs(0, 10);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = dks1d::make_r2<double>(gap(rng), gap(rng));
    for (int s = 0; s < 10; ++s) {
      const double x = xs(rng);
      CHECK(std::abs(f.inverse(f.eval(x)) - x) <= 1e-12 * std::max(1.0, x));
    }
  }
}
