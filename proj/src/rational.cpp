// Copyright 2026 The Bourbaki Authors
//
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

#include "bourbaki/rational.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "bourbaki/errors.hpp"

namespace bourbaki {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// |value| rounded half away from zero to an integer.
BigInt round_half_away(const mpq_class& value) {
  mpq_class a = abs(value);
  BigInt twice = (2 * a.get_num() + a.get_den()) / (2 * a.get_den());
  return twice;
}

std::string with_sign(bool negative, std::string body) {
  return negative ? "-" + body : body;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw ParameterError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(negative ? BigInt(-num) : num, den);
}

Rational Rational::parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? "" : body.substr(dot + 1);
  bool ok = (all_digits(int_part) || int_part.empty()) && (all_digits(frac_part) || frac_part.empty()) &&
            !(int_part.empty() && frac_part.empty()) &&
            !(dot != std::string_view::npos && frac_part.empty() && int_part.empty());
  if (!ok) throw ParseError("malformed decimal: '" + std::string(text) + "'");
  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num(digits, 10);
  Rational r(num, pow(BigInt(10), static_cast<unsigned>(frac_part.size())));
  return negative ? -r : r;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_significant(int significant) const {
  if (significant < 1) throw ParameterError("significant digits must be positive");
  if (is_zero()) return "0." + std::string(static_cast<std::size_t>(significant), '0');
  const mpq_class a = ::abs(value_);
  // exponent e with 10^e <= a < 10^(e+1); start from a size estimate and correct.
  long e = static_cast<long>(a.get_num().get_str().size()) - static_cast<long>(a.get_den().get_str().size());
  auto power_of_ten = [](long k) {
    BigInt t = pow(BigInt(10), static_cast<unsigned>(k < 0 ? -k : k));
    return k < 0 ? mpq_class(1, t) : mpq_class(t);
  };
  while (a < power_of_ten(e)) --e;
  while (a >= power_of_ten(e + 1)) ++e;
  BigInt scaled = round_half_away(a * power_of_ten(significant - 1 - e));
  if (scaled == pow(BigInt(10), static_cast<unsigned>(significant))) {
    ++e;
    scaled /= 10;
  }
  std::string digits = scaled.get_str();
  std::string out;
  if (e >= 0) {
    auto int_len = static_cast<std::size_t>(e + 1);
    if (int_len >= digits.size()) {
      out = digits + std::string(int_len - digits.size(), '0');
    } else {
      out = digits.substr(0, int_len) + "." + digits.substr(int_len);
    }
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  }
  return with_sign(sign() < 0, out);
}

std::string Rational::to_fixed(int places) const {
  if (places < 0) throw ParameterError("decimal places must be nonnegative");
  BigInt scaled = round_half_away(value_ * mpq_class(pow(BigInt(10), static_cast<unsigned>(places))));
  std::string digits = scaled.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits = std::string(static_cast<std::size_t>(places) + 1 - digits.size(), '0') + digits;
  }
  std::string out = places == 0 ? digits
                                : digits.substr(0, digits.size() - places) + "." +
                                      digits.substr(digits.size() - places);
  return with_sign(sign() < 0 && scaled != 0, out);
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ParameterError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

Rational pow(const Rational& base, unsigned exponent) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.mpq().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.mpq().get_den_mpz_t(), exponent);
  return Rational(n, d);
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt pow3(unsigned exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, exponent);
  return r;
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace bourbaki
