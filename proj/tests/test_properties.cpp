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

#include <cstdint>

#include "doctest.h"

#include "bourbaki/antiderivative.hpp"
#include "bourbaki/function.hpp"
#include "bourbaki/random.hpp"

using namespace bourbaki;

namespace {

Rational q(long p, long d) { return Rational(BigInt(p), BigInt(d)); }
Rational three(unsigned i) { return Rational(pow3(i)); }
Rational half_power(unsigned i, long base) { return Rational(pow(BigInt(2), i - 1)) / Rational(pow(BigInt(base), i)); }

constexpr int kSamples = 200;

}  // namespace

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  SplitMix64 a(42);
  SplitMix64 b(42);
  for (int k = 0; k < 100; ++k) CHECK(a.unit_rational(1000) == b.unit_rational(1000));
  SplitMix64 c(3);
  for (int k = 0; k < 1000; ++k) {
    const Rational x = c.open_unit_rational(50);
    CHECK(x > Rational(0));
    CHECK(x < Rational(1));
  }
}

TEST_CASE("symmetry about the centre") {
  SplitMix64 rng(101);
  for (int k = 0; k < kSamples; ++k) {
    const Rational x = rng.unit_rational(10000);
    CHECK(eval_exact(Rational(1) - x) + eval_exact(x) == Rational(1));
    const Rational y = eval_exact(x);
    CHECK(y >= Rational(0));
    CHECK(y <= Rational(1));
  }
}

TEST_CASE("self-affine scaling of f") {
  SplitMix64 rng(202);
  for (int k = 0; k < kSamples; ++k) {
    const Rational x = rng.unit_rational(1000);
    const auto i = static_cast<unsigned>(rng.between(1, 8));
    const Rational fx = eval_exact(x);
    CHECK(eval_exact(x / three(i)) == pow(q(2, 3), i) * fx);
    CHECK(eval_exact((Rational(2) - x) / three(i)) == half_power(i, 3) * (Rational(1) + fx));
    CHECK(eval_exact((Rational(2) + x) / three(i)) == pow(q(2, 3), i) * fx + half_power(i, 3));
  }
}

TEST_CASE("integral identities") {
  SplitMix64 rng(303);
  for (int k = 0; k < kSamples; ++k) {
    const Rational x = rng.unit_rational(1000);
    const auto i = static_cast<unsigned>(rng.between(1, 8));
    const Rational Fx = eval_F_exact(x);
    CHECK(eval_F_exact(Rational(1) - x) - Fx == integral_symmetric(x));
    CHECK(integral_symmetric(x) == q(1, 2) - x);
    CHECK(eval_F_exact(x / three(i)) == pow(q(2, 9), i) * Fx);
    const Rational corner = eval_F_exact(Rational(2) / three(i));
    CHECK(corner - eval_F_exact((Rational(2) - x) / three(i)) == half_power(i, 9) * (x + Fx));
    CHECK(eval_F_exact((Rational(2) + x) / three(i)) - corner == half_power(i, 9) * x + pow(q(2, 9), i) * Fx);
  }
}

TEST_CASE("antiderivative is increasing and bounded by its integrand") {
  SplitMix64 rng(404);
  for (int k = 0; k < kSamples; ++k) {
    Rational a = rng.unit_rational(300);
    Rational b = rng.unit_rational(300);
    if (b < a) std::swap(a, b);
    const Rational area = range_integral(a, b);
    CHECK(area >= Rational(0));
    CHECK(area <= b - a);
  }
}

TEST_CASE("family identities") {
  SplitMix64 rng(505);
  for (int k = 0; k < kSamples; ++k) {
    const FamilyParam param(rng.open_unit_rational(100));
    const Rational x = rng.unit_rational(200);
    const auto i = static_cast<unsigned>(rng.between(1, 6));
    const Rational fx = eval_exact(x, param);
    CHECK(eval_exact(Rational(1) - x, param) + fx == Rational(1));
    CHECK(eval_exact(x / three(i), param) == pow(param.a(), i) * fx);
  }
  SplitMix64 xs(606);
  for (int k = 0; k < kSamples; ++k) {
    const Rational x = xs.unit_rational(5000);
    CHECK(eval_exact(x, FamilyParam(q(2, 3))) == eval_exact(x));
  }
}
