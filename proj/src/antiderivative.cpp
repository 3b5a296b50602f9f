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

#include "bourbaki/antiderivative.hpp"

#include <array>
#include <string>
#include <vector>

#include "bourbaki/errors.hpp"
#include "bourbaki/kernels.hpp"

namespace bourbaki {
namespace {

void check_unit_interval(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) throw DomainError("argument " + x.str() + " outside [0,1]");
}

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace

AntiderivativeTable build_F_iterate(unsigned level) {
  if (level > kMaxTableLevel) {
    throw ResourceError("antiderivative level " + std::to_string(level) + " above cap " +
                        std::to_string(kMaxTableLevel));
  }
  std::vector<Rational> values{Rational(0), frac(1, 2)};
  for (unsigned i = 0; i < level; ++i) values = kernels::refine_thirds_parallel(values);
  return AntiderivativeTable(level, std::move(values));
}

AffineMap F_step_map(Digit d, const Rational& t) {
  check_unit_interval(t);
  switch (d) {
    case 0:
      return {frac(2, 9), Rational(0)};
    case 1:
      return {frac(-1, 9), (Rational(1) + Rational(2) * t) * frac(1, 9)};
    case 2:
      return {frac(2, 9), (frac(5, 2) + t) * frac(1, 9)};
    default:
      throw ParameterError("ternary digit outside {0,1,2}");
  }
}

DigitStatePair F_digit_step(Digit d, const Rational& t, const AffineMap& m) {
  AffineMap step = F_step_map(d, t);
  return {(Rational(d) + t) * frac(1, 3), affine_compose(step, m)};
}

Rational eval_F_exact(const Rational& x) {
  const TernaryExpansion e = to_ternary(x);
  const std::size_t n = e.preperiod().size();
  const std::size_t len = e.period().size();
  // tails[j] is the value of the expansion with its first j digits removed.
  const std::vector<Rational> tails = ternary_tails(x, n + len);
  auto step = [&](std::size_t j, Digit d) { return F_step_map(d, tails[j + 1]); };

  Rational closing(0);
  if (len > 0) {
    std::vector<AffineMap> cycle;
    cycle.reserve(len);
    for (std::size_t j = 0; j < len; ++j) cycle.push_back(step(n + j, e.period()[j]));
    const AffineMap m = compose_all(cycle);
    if (m.slope.abs() >= Rational(1)) throw ConsistencyError("periodic digit cycle is not a contraction");
    closing = affine_fixed_point(m);
  }
  std::vector<AffineMap> head;
  head.reserve(n);
  for (std::size_t j = 0; j < n; ++j) head.push_back(step(j, e.preperiod()[j]));
  return compose_all(head)(closing);
}

Rational integral_symmetric(const Rational& x) {
  check_unit_interval(x);
  return frac(1, 2) - x;
}

Rational range_integral(const Rational& a, const Rational& b) {
  check_unit_interval(a);
  check_unit_interval(b);
  if (a > b) throw OrderError("integration bounds out of order: " + a.str() + " > " + b.str());
  return eval_F_exact(b) - eval_F_exact(a);
}

IntegralCase parse_integral_case(std::string_view text) {
  static constexpr std::array<std::string_view, 4> names{"i", "ii", "iii", "iv"};
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (text == names[k]) return static_cast<IntegralCase>(k);
  }
  throw ParseError("unknown integral case '" + std::string(text) + "' (expected i..iv)");
}

std::string_view to_string(IntegralCase c) {
  static constexpr std::array<std::string_view, 4> names{"i", "ii", "iii", "iv"};
  return names[static_cast<std::size_t>(c)];
}

IntegralClosedForm integral_closed_form(IntegralCase c, unsigned i) {
  // 1 - (2/9)^i vanishes at i = 0.
  if (i == 0) throw ParameterError("integral closed forms require i > 0");
  const Rational p3(pow3(i));
  const Rational lead = Rational(pow(BigInt(2), i - 1)) / Rational(pow(BigInt(9), i));
  const Rational shrink = Rational(1) - pow(frac(2, 9), i);
  const Rational grow = Rational(1) + lead;
  switch (c) {
    case IntegralCase::i:
      return {Rational(1) / (p3 + 1), lead * ((p3 - 1) / (p3 + 1)) / shrink};
    case IntegralCase::ii:
      return {Rational(1) / (p3 - 1), lead * ((p3 + 1) / (p3 - 1)) / grow};
    case IntegralCase::iii:
      return {Rational(2) / (p3 + 1), lead * ((Rational(5) * p3 + 1) / (Rational(2) * p3 + 2)) / grow};
    case IntegralCase::iv:
      return {Rational(2) / (p3 - 1), lead * ((Rational(5) * p3 - 1) / (Rational(2) * p3 - 2)) / shrink};
  }
  throw ParameterError("unknown integral case");
}

}  // namespace bourbaki
