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

#include "bourbaki/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "bourbaki/errors.hpp"

namespace bourbaki {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& value, mpfr_rnd_t rounding, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.mpq().get_mpq_t(), rounding);
}

BigFloat BigFloat::from_int(long value, mpfr_prec_t precision) {
  BigFloat out(precision);
  mpfr_set_si(out.value_, value, MPFR_RNDN);
  return out;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_fixed(int digits) const {
  char* raw = nullptr;
  std::string format = "%." + std::to_string(digits) + "RNf";
  if (mpfr_asprintf(&raw, format.c_str(), value_) < 0) throw ParameterError("mpfr formatting failed");
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

int BigFloat::compare(const Rational& r) const { return mpfr_cmp_q(value_, r.mpq().get_mpq_t()); }

BigFloat sqrt(const Rational& value, mpfr_rnd_t rounding, mpfr_prec_t precision) {
  if (value.sign() < 0) throw DomainError("square root of a negative rational");
  // Directed rounding needs the input conversion rounded the same way.
  BigFloat in(value, rounding, precision + 64);
  BigFloat out(precision);
  mpfr_sqrt(out.get(), in.get(), rounding);
  return out;
}

namespace {

template <typename Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rounding, Op op) {
  BigFloat out(std::max(a.precision(), b.precision()));
  op(out.get(), a.get(), b.get(), rounding);
  return out;
}

}  // namespace

BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rounding) { return binary(a, b, rounding, mpfr_add); }
BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rounding) { return binary(a, b, rounding, mpfr_sub); }
BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rounding) { return binary(a, b, rounding, mpfr_mul); }
BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rounding) { return binary(a, b, rounding, mpfr_div); }
BigFloat pow(const BigFloat& base, const BigFloat& exponent, mpfr_rnd_t rounding) {
  return binary(base, exponent, rounding, mpfr_pow);
}

BigFloat log(const BigFloat& a, mpfr_rnd_t rounding) {
  BigFloat out(a.precision());
  mpfr_log(out.get(), a.get(), rounding);
  return out;
}

}  // namespace bourbaki
