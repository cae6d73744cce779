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

#ifndef DKS1D_NUMERICS_HPP_
#define DKS1D_NUMERICS_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "dks1d/errors.hpp"

namespace dks1d {

// Exact rational backed by GMP. Expression templates are off so that `auto`
// and value semantics behave like a plain arithmetic type; mpq_t keeps every
// result in lowest terms.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T>
struct ToleranceConfig {
  T rel_eps{0};
  T abs_eps{0};
};

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;
  static constexpr const char* kName = "float";

  static ToleranceConfig<double> default_tolerance() { return {1e-12, 1e-15}; }
  static double from_ratio(std::int64_t num, std::int64_t den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double from_double(double v) { return v; }
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static constexpr const char* kName = "exact";

  static ToleranceConfig<Rational> default_tolerance() { return {}; }
  static Rational from_ratio(std::int64_t num, std::int64_t den) {
    return Rational(num, den);
  }
  // Every finite double is a dyadic rational; the conversion is lossless.
  static Rational from_double(double v) { return Rational(v); }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static Rational abs(const Rational& v) { return boost::multiprecision::abs(v); }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::kExact; };

template <class T>
constexpr bool is_exact_v = ScalarTraits<T>::kExact;

template <Scalar T>
ToleranceConfig<T> default_tolerance() {
  return ScalarTraits<T>::default_tolerance();
}

template <Scalar T>
T scalar_abs(const T& v) {
  return ScalarTraits<T>::abs(v);
}

template <Scalar T>
double to_double(const T& v) {
  return ScalarTraits<T>::to_double(v);
}

// |a-b| <= max(abs_eps, rel_eps * max(|a|,|b|)). All-zero tolerances give
// exact equality.
template <Scalar T>
bool approx_eq(const T& a, const T& b, const ToleranceConfig<T>& cfg) {
  if (a == b) return true;
  const T diff = scalar_abs<T>(a - b);
  T scale = scalar_abs<T>(a);
  const T bmag = scalar_abs<T>(b);
  if (bmag > scale) scale = bmag;
  T bound = cfg.rel_eps * scale;
  if (cfg.abs_eps > bound) bound = cfg.abs_eps;
  return diff <= bound;
}

// a >= b, or approx_eq(a, b) in the float backend.
template <Scalar T>
bool approx_ge(const T& a, const T& b, const ToleranceConfig<T>& cfg) {
  return a >= b || approx_eq(a, b, cfg);
}

template <Scalar T>
T scalar_from_ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("scalar_from_ratio: zero denominator");
  return ScalarTraits<T>::from_ratio(num, den);
}

template <Scalar T>
T scalar_from_double(double v) {
  return ScalarTraits<T>::from_double(v);
}

// Parses "p", "p/q", or a decimal such as "-1.25e3". In the exact backend
// decimals are read as the exact decimal fraction they denote (0.1 is 1/10).
template <Scalar T>
T parse_scalar(std::string_view token);

template <>
double parse_scalar<double>(std::string_view token);
template <>
Rational parse_scalar<Rational>(std::string_view token);

// Integers print without a denominator; other rationals as "p/q". Doubles
// use the shortest round-trip representation.
std::string format_scalar(double v);
std::string format_scalar(const Rational& v);

}  // namespace dks1d

#endif  // DKS1D_NUMERICS_HPP_
