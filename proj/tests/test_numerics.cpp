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

#include "dks1d/errors.hpp"
#include "dks1d/numerics.hpp"

using dks1d::Rational;

TEST_CASE("approx_eq follows the mixed absolute/relative rule") {
  const dks1d::ToleranceConfig<double> zero{0.0, 0.0};
  CHECK(dks1d::approx_eq(1.0, 1.0, zero));
  CHECK_FALSE(dks1d::approx_eq(1.0, 1.0 + 1e-14, zero));
  const dks1d::ToleranceConfig<double> rel{1e-12, 0.0};
  CHECK(dks1d::approx_eq(1.0, 1.0 + 1e-14, rel));
  CHECK_FALSE(dks1d::approx_eq(1.0, 1.0 + 1e-10, rel));
  const dks1d::ToleranceConfig<double> abs_floor{0.0, 1e-9};
  CHECK(dks1d::approx_eq(0.0, 5e-10, abs_floor));
}

TEST_CASE("exact rationals compare exactly") {
  const auto cfg = dks1d::default_tolerance<Rational>();
  CHECK(cfg.rel_eps == 0);
  CHECK(cfg.abs_eps == 0);
  CHECK_FALSE(dks1d::approx_eq(Rational(1, 3), Rational(3333, 10000), cfg));
  CHECK(dks1d::approx_eq(Rational(2, 6), Rational(1, 3), cfg));
}

TEST_CASE("float defaults") {
  const auto cfg = dks1d::default_tolerance<double>();
  CHECK(cfg.rel_eps == 1e-12);
  CHECK(cfg.abs_eps == 1e-15);
}

TEST_CASE("scalar_from_ratio") {
  CHECK(dks1d::scalar_from_ratio<double>(1, 2) == 0.5);
  CHECK(dks1d::scalar_from_ratio<Rational>(2, 4) == dks1d::scalar_from_ratio<Rational>(1, 2));
  CHECK(dks1d::scalar_from_ratio<Rational>(-3, 1) == Rational(-3));
  CHECK(dks1d::format_scalar(dks1d::scalar_from_ratio<Rational>(2, 4)) == "1/2");
  CHECK_THROWS_AS(dks1d::scalar_from_ratio<Rational>(1, 0), dks1d::InvalidArgument);
  CHECK_THROWS_AS(dks1d::scalar_from_ratio<double>(1, 0), dks1d::InvalidArgument);
}

TEST_CASE("exact field identities") {
  const Rational a(7, 13);
  const Rational b(-22, 9);
  CHECK((a / b) * b == a);
  const Rational c(1, 1000);
  CHECK(a < a + c);
  CHECK(a * c < (a + c) * c);
  CHECK(dks1d::scalar_abs(b) == Rational(22, 9));
}

TEST_CASE("parse_scalar, exact") {
  using dks1d::parse_scalar;
  CHECK(parse_scalar<Rational>("1/3") == Rational(1, 3));
  CHECK(parse_scalar<Rational>("-4/6") == Rational(-2, 3));
  CHECK(parse_scalar<Rational>("0.1") == Rational(1, 10));
  CHECK(parse_scalar<Rational>("2.5e2") == Rational(250));
  CHECK(parse_scalar<Rational>("1e-3") == Rational(1, 1000));
  CHECK(parse_scalar<Rational>(".5") == Rational(1, 2));
  CHECK(parse_scalar<Rational>("+3") == Rational(3));
  CHECK_THROWS_AS(parse_scalar<Rational>("abc"), dks1d::InvalidArgument);
  CHECK_THROWS_AS(parse_scalar<Rational>("1/0"), dks1d::InvalidArgument);
  CHECK_THROWS_AS(parse_scalar<Rational>("1.2.3"), dks1d::InvalidArgument);
  CHECK_THROWS_AS(parse_scalar<Rational>("1e"), dks1d::InvalidArgument);
}

TEST_CASE("parse_scalar, float") {
  using dks1d::parse_scalar;
  CHECK(parse_scalar<double>("1.5") == 1.5);
  CHECK(parse_scalar<double>("1/4") == 0.25);
  CHECK(parse_scalar<double>("-2e3") == -2000.0);
  CHECK_THROWS_AS(parse_scalar<double>("1.5x"), dks1d::InvalidArgument);
  CHECK_THROWS_AS(parse_scalar<double>("inf"), dks1d::InvalidArgument);
}

TEST_CASE("format_scalar") {
  CHECK(dks1d::format_scalar(Rational(5)) == "5");
  CHECK(dks1d::format_scalar(Rational(-1, 3)) == "-1/3");
  CHECK(dks1d::format_scalar(0.1) == "0.1");
  CHECK(dks1d::format_scalar(2.0) == "2");
}
