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

#include <algorithm>
#include <optional>
#include <string_view>

#include "bourbaki/affine.hpp"
#include "bourbaki/core_types.hpp"
#include "bourbaki/rational.hpp"
#include "bourbaki/tables.hpp"
#include "bourbaki/ternary.hpp"

namespace bourbaki {

/// Level-i iterate f_i, refined inductively from f_0(x) = x: each segment
/// keeps its endpoints and gains interior values at fractions a and 1-a of
/// its rise. Throws ResourceError above kMaxTableLevel.
IterateTable build_iterate(unsigned level, const FamilyParam& param = FamilyParam::classical());

/// Exact interpolation in a table; the stored value at a breakpoint.
/// Throws DomainError outside [0,1].
Rational eval_iterate(const IterateTable& table, const Rational& x);
Rational eval_iterate(const AntiderivativeTable& table, const Rational& x);

/// One segment of an iterate, with the values at its two ends.
struct IterateSegment {
  unsigned level = 0;
  Rational x_lo;
  Rational x_hi{1};
  Rational y_at_lo;
  Rational y_at_hi{1};

  Rational y_min() const { return std::min(y_at_lo, y_at_hi); }
  Rational y_max() const { return std::max(y_at_lo, y_at_hi); }
  Rational height() const { return y_max() - y_min(); }
};

/// The level-`level` segment of f_i whose closed x-interval contains x
/// (the left one at a shared endpoint, except at x = 1). Only the cells on
/// the path to x are refined, so deep levels are cheap. The graph of the
/// limit function over the cell lies inside the segment's bounding box.
IterateSegment containing_segment(unsigned level, const Rational& x, const FamilyParam& param = FamilyParam::classical());

/// Contraction w_n of the graph, n in {1,2,3}:
///   w1(x,y) = (x/3, 2y/3), w2(x,y) = ((2-x)/3, (1+y)/3), w3(x,y) = ((2+x)/3, (1+2y)/3).
/// Throws ParameterError for other n.
PlanePoint ifs_map_point(int n, const PlanePoint& p);

/// Images of every breakpoint under w1, w2, w3, merged left to right.
/// Equals build_iterate(level + 1). Throws ParameterError for a non-classical table.
IterateTable ifs_refine(const IterateTable& table);

/// v = f_a(t)  ->  f_a((d + t)/3):
///   d=0: a v,  d=1: a - (2a-1) v,  d=2: a v + (1-a).
/// Throws ParameterError for d > 2.
AffineMap digit_step_map(Digit d, const FamilyParam& param = FamilyParam::classical());

/// Exact f_a(x) for rational x in [0,1]. The periodic part of the ternary
/// expansion composes to a contraction whose fixed point is f_a at the
/// periodic tail; the preperiod maps are then applied to that value.
Rational eval_exact(const Rational& x, const FamilyParam& param = FamilyParam::classical());

/// Interval [lo, hi] containing f(x).
struct Enclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

/// Encloses f(x) in an interval of width <= tol by descending the
/// containing segment until it is short enough. Classical parameter.
/// Throws DomainError outside [0,1] and ParameterError for tol <= 0.
Enclosure approx_eval(const Rational& x, const Rational& tol);
/// As above for a decimal string ("0.25"); throws ParseError if malformed.
Enclosure approx_eval(std::string_view decimal, const Rational& tol);

enum class ValueCase { i, ii, iii, iv, v, vi };

/// "i".."vi"; throws ParseError otherwise.
ValueCase parse_value_case(std::string_view text);
std::string_view to_string(ValueCase c);

struct ClosedForm {
  Rational x;
  Rational value;
};

/// Closed-form values of f at 1/(3^i+1), 1/(3^i-1), 2/(3^i+1), 2/(3^i-1),
/// 1/(3^j+3^i) and 1/(3^j-3^i). Requires i > 0, and j > i for the last two;
/// ParameterError otherwise.
ClosedForm closed_form_value(ValueCase c, unsigned i, std::optional<unsigned> j = std::nullopt);

}  // namespace bourbaki
