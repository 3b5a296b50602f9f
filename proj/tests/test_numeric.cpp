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

#include "bourbaki/affine.hpp"
#include "bourbaki/bigfloat.hpp"
#include "bourbaki/errors.hpp"
#include "bourbaki/rational.hpp"
#include "bourbaki/ternary.hpp"

using namespace bourbaki;

namespace {
Rational q(long p, long d) { return Rational(BigInt(p), BigInt(d)); }
}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(Rational::parse("2/4") == q(1, 2));
  CHECK(Rational::parse("1") == Rational(1));
  CHECK(Rational::parse("-3/9") == q(-1, 3));
  CHECK(Rational::parse("1/2").str() == "1/2");
  CHECK(Rational(1).str() == "1/1");
  CHECK(Rational(0).str() == "0/1");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
  CHECK(Rational::parse_decimal("0.25") == q(1, 4));
  CHECK(Rational::parse_decimal("1") == Rational(1));
  CHECK_THROWS_AS(Rational::parse_decimal("0.2.5"), ParseError);
}

TEST_CASE("rational decimals") {
  CHECK(q(1, 2).to_significant(12) == "0.500000000000");
  CHECK(q(8, 23).to_significant(12) == "0.347826086957");
  CHECK(q(2, 3).to_significant(12) == "0.666666666667");
  CHECK(q(1, 14).to_significant(12) == "0.0714285714286");
  CHECK(Rational(1).to_significant(12) == "1.00000000000");
  CHECK(Rational(0).to_significant(12) == "0.000000000000");
  CHECK(q(1, 8).to_fixed(2) == "0.13");
  CHECK(q(-1, 8).to_fixed(2) == "-0.13");
}

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 3) + q(1, 6) == q(1, 2));
  CHECK(q(1, 3) * q(3, 4) == q(1, 4));
  CHECK(q(1, 3) - q(1, 2) == q(-1, 6));
  CHECK(q(1, 3) / q(2, 3) == q(1, 2));
  CHECK_THROWS_AS(q(1, 3) / Rational(0), ParameterError);
  CHECK(q(1, 3) < q(1, 2));
  CHECK(pow(q(2, 3), 3) == q(8, 27));
  CHECK(pow3(4) == 81);
  CHECK(q(7, 2).floor() == 3);
  CHECK(q(7, 2).ceil() == 4);
  CHECK(q(-7, 2).floor() == -4);
  CHECK(q(-1, 5).abs() == q(1, 5));
}

TEST_CASE("bigfloat directed rounding brackets sqrt") {
  const BigFloat lo = sqrt(q(5, 4), MPFR_RNDD);
  const BigFloat hi = sqrt(q(5, 4), MPFR_RNDU);
  CHECK(lo <= hi);
  CHECK(lo.to_fixed(30) == "1.118033988749894848204586834366");
  CHECK(mul(lo, lo, MPFR_RNDD).compare(q(5, 4)) <= 0);
  CHECK(mul(hi, hi, MPFR_RNDU).compare(q(5, 4)) >= 0);
  CHECK(BigFloat::from_int(3).to_double() == 3.0);
}

TEST_CASE("ternary expansions") {
  CHECK(to_ternary(q(1, 4)) == TernaryExpansion({}, {0, 2}));
  CHECK(to_ternary(q(1, 7)) == TernaryExpansion({}, {0, 1, 0, 2, 1, 2}));
  CHECK(to_ternary(q(1, 3)) == TernaryExpansion({1}, {}));
  CHECK(to_ternary(q(5, 18)) == TernaryExpansion({0, 2}, {1}));
  CHECK(to_ternary(Rational(1)) == TernaryExpansion({}, {2}));
  CHECK(to_ternary(Rational(0)) == TernaryExpansion());
  CHECK_THROWS_AS(to_ternary(q(3, 2)), DomainError);
  CHECK_THROWS_AS(to_ternary(q(-1, 2)), DomainError);
  CHECK_THROWS_AS(TernaryExpansion({3}, {}), ParameterError);
  CHECK_THROWS_AS(TernaryExpansion({}, {0, 0}), ParameterError);
  for (long d = 1; d <= 60; ++d)
    for (long p = 0; p <= d; ++p) {
      const TernaryExpansion e = to_ternary(q(p, d));
      CHECK(e.is_canonical());
      CHECK(from_ternary(e) == q(p, d));
    }
  const std::vector<Digit> digits{1, 2};
  CHECK(from_digits(digits) == q(5, 9));
}

TEST_CASE("ternary tails") {
  const auto tails = ternary_tails(q(1, 4), 4);
  REQUIRE(tails.size() == 5);
  CHECK(tails[0] == q(1, 4));
  CHECK(tails[1] == q(3, 4));
  CHECK(tails[2] == q(1, 4));
  CHECK(ternary_tails(Rational(1), 2) == std::vector<Rational>{1, 1, 1});
}

TEST_CASE("affine maps") {
  const AffineMap m{q(1, 2), q(1, 3)};
  const AffineMap n{Rational(3), Rational(-1)};
  CHECK(affine_compose(m, n)(Rational(2)) == m(n(Rational(2))));
  CHECK(affine_fixed_point(m) == q(2, 3));
  CHECK_THROWS_AS(affine_fixed_point(AffineMap{Rational(1), Rational(2)}), SingularMapError);
  const std::vector<AffineMap> maps{m, n, m};
  CHECK(compose_all(maps) == affine_compose(m, affine_compose(n, m)));
  CHECK(compose_all(std::vector<AffineMap>{}) == AffineMap::identity());
}
