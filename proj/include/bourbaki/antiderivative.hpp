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

#include <string_view>

#include "bourbaki/affine.hpp"
#include "bourbaki/rational.hpp"
#include "bourbaki/tables.hpp"
#include "bourbaki/ternary.hpp"

namespace bourbaki {

/// Level-i iterate F_i of F(x) = integral of f over [0,x], built from
/// F_0(x) = x/2 by mapping the whole level-i table into each third of [0,1]:
///   F((0 + t)/3) = (2/9) F(t)
///   F((1 + t)/3) = (1 + 2t - F(t)) / 9
///   F((2 + t)/3) = (5/2 + t)/9 + (2/9) F(t)
/// Throws ResourceError above kMaxTableLevel, ConsistencyError if shared
/// breakpoints disagree.
AntiderivativeTable build_F_iterate(unsigned level);

/// Walk state for the antiderivative: F_map(F(closing tail)) = F(tail_value).
struct DigitStatePair {
  Rational tail_value;
  AffineMap F_map;
};

/// Extends the walk outward by one digit: the new point is (d + t)/3 and the
/// new map is G_{d,t} o m, where G_{d,t} is the third-map above evaluated at
/// tail t. Throws ParameterError for d > 2, DomainError for t outside [0,1].
DigitStatePair F_digit_step(Digit d, const Rational& t, const AffineMap& m);

/// The third-map G_{d,t} alone: F(t) -> F((d + t)/3).
AffineMap F_step_map(Digit d, const Rational& t);

/// Exact F(x) for rational x in [0,1]. Throws DomainError outside [0,1].
Rational eval_F_exact(const Rational& x);

/// Integral of f over [x, 1-x], i.e. 1/2 - x (negative when x > 1/2).
/// Throws DomainError outside [0,1].
Rational integral_symmetric(const Rational& x);

/// Integral of f over [a, b]. Throws OrderError if a > b.
Rational range_integral(const Rational& a, const Rational& b);

enum class IntegralCase { i, ii, iii, iv };

/// "i".."iv"; throws ParseError otherwise.
IntegralCase parse_integral_case(std::string_view text);
std::string_view to_string(IntegralCase c);

struct IntegralClosedForm {
  Rational x;
  Rational value;
};

/// Closed-form F at 1/(3^i+1), 1/(3^i-1), 2/(3^i+1), 2/(3^i-1).
/// Throws ParameterError for i = 0.
IntegralClosedForm integral_closed_form(IntegralCase c, unsigned i);

}  // namespace bourbaki
