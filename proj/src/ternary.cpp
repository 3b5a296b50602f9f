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

#include "bourbaki/ternary.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "bourbaki/errors.hpp"

namespace bourbaki {
namespace {

void check_unit_interval(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) throw DomainError("argument " + x.str() + " outside [0,1]");
}

Digit to_digit(unsigned long v) { return static_cast<Digit>(v); }
Digit to_digit(const BigInt& v) { return static_cast<Digit>(v.get_ui()); }

// Base-3 long division of p/q (0 <= p < q, gcd = 1). The preperiod length is
// the 3-adic valuation of q, and the period is the cycle of remainders that
// starts right after it, so no remainder table is needed.
template <typename Int>
TernaryExpansion long_divide(Int p, Int q, unsigned preperiod_length) {
  std::vector<Digit> pre;
  std::vector<Digit> period;
  pre.reserve(preperiod_length);
  Int r = p;
  for (unsigned j = 0; j < preperiod_length && r != 0; ++j) {
    r *= 3;
    pre.push_back(to_digit(Int(r / q)));
    r %= q;
  }
  if (r == 0) return TernaryExpansion(std::move(pre), {});
  const Int start = r;
  do {
    r *= 3;
    period.push_back(to_digit(Int(r / q)));
    r %= q;
  } while (r != start);
  return TernaryExpansion(std::move(pre), std::move(period));
}

BigInt digits_as_integer(std::span<const Digit> digits) {
  if (digits.empty()) return 0;
  std::string text(digits.size(), '0');
  std::transform(digits.begin(), digits.end(), text.begin(), [](Digit d) { return static_cast<char>('0' + d); });
  return BigInt(text, 3);
}

}  // namespace

TernaryExpansion::TernaryExpansion(std::vector<Digit> preperiod, std::vector<Digit> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  auto valid = [](Digit d) { return d <= 2; };
  if (!std::all_of(preperiod_.begin(), preperiod_.end(), valid) ||
      !std::all_of(period_.begin(), period_.end(), valid)) {
    throw ParameterError("ternary digit outside {0,1,2}");
  }
  if (!period_.empty() && std::all_of(period_.begin(), period_.end(), [](Digit d) { return d == 0; })) {
    throw ParameterError("ternary period of zeros; use a terminating expansion");
  }
}

bool TernaryExpansion::is_canonical() const {
  if (period_.empty()) return preperiod_.empty() || preperiod_.back() != 0;
  // minimal period
  const std::size_t n = period_.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool repeats = true;
    for (std::size_t j = len; j < n && repeats; ++j) repeats = period_[j] == period_[j - len];
    if (repeats) return false;
  }
  // preperiod could absorb into the period if its last digit equals the period's last
  if (!preperiod_.empty() && preperiod_.back() == period_.back()) return false;
  // 0.x222... with a nonempty prefix is the terminating form of another number
  if (period_ == std::vector<Digit>{2} && !preperiod_.empty()) return false;
  return true;
}

TernaryExpansion to_ternary(const Rational& x) {
  check_unit_interval(x);
  if (x == Rational(1)) return TernaryExpansion({}, {2});
  if (x.is_zero()) return {};
  const BigInt p = x.num();
  const BigInt q = x.den();
  const unsigned preperiod_length = static_cast<unsigned>(mpz_remove(BigInt().get_mpz_t(), q.get_mpz_t(), BigInt(3).get_mpz_t()));
  // 3q must not overflow in the fast path.
  if (q.fits_ulong_p() && q.get_ui() < std::numeric_limits<unsigned long>::max() / 4) {
    return long_divide<unsigned long>(p.get_ui(), q.get_ui(), preperiod_length);
  }
  return long_divide<BigInt>(p, q, preperiod_length);
}

Rational from_digits(std::span<const Digit> digits) {
  return Rational(digits_as_integer(digits), pow3(static_cast<unsigned>(digits.size())));
}

Rational from_ternary(const TernaryExpansion& e) {
  Rational head = from_digits(e.preperiod());
  if (e.terminates()) return head;
  const auto n = static_cast<unsigned>(e.preperiod().size());
  const auto len = static_cast<unsigned>(e.period().size());
  Rational cycle(digits_as_integer(e.period()), pow3(len) - 1);
  return head + cycle / Rational(pow3(n));
}

std::vector<Rational> ternary_tails(const Rational& x, std::size_t count) {
  check_unit_interval(x);
  std::vector<Rational> tails;
  tails.reserve(count + 1);
  tails.push_back(x);
  for (std::size_t j = 0; j < count; ++j) {
    const Rational& t = tails.back();
    if (t == Rational(1)) {
      tails.push_back(t);
      continue;
    }
    Rational scaled = t * Rational(3);
    tails.push_back(scaled - Rational(scaled.floor()));
  }
  return tails;
}

}  // namespace bourbaki
