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

#include "dks1d/numerics.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace dks1d {
namespace {

using boost::multiprecision::mpz_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Splits an optional leading sign off `s`.
bool take_sign(std::string_view& s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  return negative;
}

mpz_int parse_integer(std::string_view s) {
  const bool negative = take_sign(s);
  if (!all_digits(s)) {
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  }
  mpz_int v{std::string(s)};
  return negative ? mpz_int(-v) : v;
}

// Decimal literal [sign] digits [. digits] [e|E [sign] digits] as an exact
// rational.
Rational parse_decimal(std::string_view s) {
  const std::string original(s);
  const bool negative = take_sign(s);
  std::string_view exponent_part;
  bool has_exponent = false;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    has_exponent = true;
    exponent_part = s.substr(e + 1);
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw InvalidArgument("not a number: '" + original + "'");
  }
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw InvalidArgument("not a number: '" + original + "'");
  }
  long exponent = 0;
  if (has_exponent) {
    std::string_view ex = exponent_part;
    const bool ex_negative = take_sign(ex);
    if (!all_digits(ex) || ex.size() > 6) {
      throw InvalidArgument("bad exponent in '" + original + "'");
    }
    long value = 0;
    std::from_chars(ex.data(), ex.data() + ex.size(), value);
    exponent = ex_negative ? -value : value;
  }
  mpz_int digits(std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part));
  exponent -= static_cast<long>(frac_part.size());
  mpz_int ten_pow = boost::multiprecision::pow(mpz_int(10),
                                               static_cast<unsigned>(exponent < 0 ? -exponent
                                                                                  : exponent));
  Rational r = exponent < 0 ? Rational(digits, ten_pow) : Rational(digits * ten_pow);
  return negative ? Rational(-r) : r;
}

}  // namespace

template <>
Rational parse_scalar<Rational>(std::string_view token) {
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    mpz_int num = parse_integer(token.substr(0, slash));
    mpz_int den = parse_integer(token.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(token) + "'");
    return Rational(num, den);
  }
  return parse_decimal(token);
}

template <>
double parse_scalar<double>(std::string_view token) {
  if (token.find('/') != std::string_view::npos) {
    return parse_scalar<Rational>(token).convert_to<double>();
  }
  std::string_view s = token;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw InvalidArgument("not a number: '" + std::string(token) + "'");
  }
  return value;
}

std::string format_scalar(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string format_scalar(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) {
    return boost::multiprecision::numerator(v).str();
  }
  return v.str();
}

}  // namespace dks1d
