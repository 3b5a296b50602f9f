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

#pragma once

#include <mpfr.h>

#include <string>

#include "bourbaki/rational.hpp"

namespace bourbaki {

/// Owning MPFR value. Used where the exact pipeline needs transcendental
/// functions (square roots, logarithms, powers) under explicit rounding.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = kDefaultPrecision);
  BigFloat(const Rational& value, mpfr_rnd_t rounding, mpfr_prec_t precision = kDefaultPrecision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  // 192 bits is a little over 57 decimal digits.
  static constexpr mpfr_prec_t kDefaultPrecision = 192;

  static BigFloat from_int(long value, mpfr_prec_t precision = kDefaultPrecision);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Positional decimal with `digits` digits after the point, round-to-nearest.
  std::string to_fixed(int digits) const;

  /// Exact comparison of the stored binary value against a rational.
  int compare(const Rational& r) const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

BigFloat sqrt(const Rational& value, mpfr_rnd_t rounding, mpfr_prec_t precision = BigFloat::kDefaultPrecision);
BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rounding);
BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rounding);
BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rounding);
BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rounding);
BigFloat log(const BigFloat& a, mpfr_rnd_t rounding);
BigFloat pow(const BigFloat& base, const BigFloat& exponent, mpfr_rnd_t rounding);

}  // namespace bourbaki
