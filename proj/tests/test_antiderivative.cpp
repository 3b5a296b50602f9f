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

#include <vector>

#include "doctest.h"

#include "bourbaki/antiderivative.hpp"
#include "bourbaki/errors.hpp"
#include "bourbaki/function.hpp"

using namespace bourbaki;

namespace {
Rational q(long p, long d) { return Rational(BigInt(p), BigInt(d)); }
std::vector<Rational> vec(std::span<const Rational> s) { return {s.begin(), s.end()}; }
}  // namespace

TEST_CASE("antiderivative tables") {
  CHECK(vec(build_F_iterate(0).values()) == std::vector<Rational>{0, q(1, 2)});
  CHECK(vec(build_F_iterate(1).values()) == std::vector<Rational>{0, q(1, 9), q(5, 18), q(1, 2)});
  const AntiderivativeTable t2 = build_F_iterate(2);
  CHECK(t2.y(1) == q(2, 81));
  CHECK(t2.y(3) == q(1, 9));
  CHECK(t2.y(6) == q(5, 18));
  CHECK_THROWS_AS(build_F_iterate(kMaxTableLevel + 1), ResourceError);
}

TEST_CASE("exact antiderivative values") {
  CHECK(eval_F_exact(Rational(1)) == q(1, 2));
  CHECK(eval_F_exact(Rational(0)) == Rational(0));
  CHECK(eval_F_exact(q(1, 3)) == q(1, 9));
  CHECK(eval_F_exact(q(2, 3)) == q(5, 18));
  CHECK(eval_F_exact(q(1, 4)) == q(1, 14));
  CHECK(eval_F_exact(q(1, 2)) == q(1, 5));
  CHECK(eval_F_exact(q(1, 9)) == q(2, 81));
  CHECK(eval_F_exact(q(1, 7)) == q(188, 5131));
  CHECK_THROWS_AS(eval_F_exact(q(4, 3)), DomainError);
  const AntiderivativeTable t = build_F_iterate(6);
  for (std::size_t k = 0; k < t.size(); ++k) CHECK(eval_F_exact(t.x(k)) == t.y(k));
}

TEST_CASE("symmetric integral and ranges") {
  for (long d = 2; d <= 30; ++d)
    for (long p = 0; p <= d; ++p) {
      const Rational x = q(p, d);
      CHECK(eval_F_exact(Rational(1) - x) - eval_F_exact(x) == integral_symmetric(x));
    }
  CHECK(range_integral(q(1, 3), q(2, 3)) == q(5, 18) - q(1, 9));
  CHECK(range_integral(q(1, 2), q(1, 2)) == Rational(0));
  CHECK_THROWS_AS(range_integral(q(2, 3), q(1, 3)), OrderError);
  CHECK_THROWS_AS(range_integral(q(-1, 3), q(1, 3)), DomainError);
}

TEST_CASE("digit steps") {
  CHECK(F_step_map(0, q(1, 2)) == AffineMap{q(2, 9), Rational(0)});
  CHECK(F_step_map(1, q(1, 2)) == AffineMap{q(-1, 9), q(2, 9)});
  CHECK(F_step_map(2, Rational(0)) == AffineMap{q(2, 9), q(5, 18)});
  CHECK_THROWS_AS(F_step_map(3, Rational(0)), ParameterError);
  const DigitStatePair s = F_digit_step(2, Rational(1), AffineMap::identity());
  CHECK(s.tail_value == Rational(1));
  CHECK(s.F_map(q(1, 2)) == q(1, 2));
}

TEST_CASE("integral closed forms") {
  const IntegralCase cases[] = {IntegralCase::i, IntegralCase::ii, IntegralCase::iii, IntegralCase::iv};
  for (IntegralCase c : cases)
    for (unsigned i = 1; i <= 6; ++i) {
      const IntegralClosedForm cf = integral_closed_form(c, i);
      CHECK(eval_F_exact(cf.x) == cf.value);
    }
  CHECK(integral_closed_form(IntegralCase::i, 1).value == q(1, 14));
  CHECK(integral_closed_form(IntegralCase::iii, 1).value == q(1, 5));
  CHECK_THROWS_AS(integral_closed_form(IntegralCase::i, 0), ParameterError);
  CHECK(parse_integral_case("ii") == IntegralCase::ii);
  CHECK_THROWS_AS(parse_integral_case("v"), ParseError);
}
