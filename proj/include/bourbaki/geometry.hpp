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

#include <span>
#include <string_view>
#include <vector>

#include "bourbaki/bigfloat.hpp"
#include "bourbaki/rational.hpp"
#include "bourbaki/ternary.hpp"

namespace bourbaki {

inline constexpr unsigned kMaxBoxLevel = 10;
inline constexpr unsigned kMaxCoverLevel = 10;
inline constexpr unsigned kMaxMassCheckLevel = 8;
inline constexpr unsigned kMaxArcLevel = 12;

struct BoxCountReport {
  unsigned level = 0;
  Rational delta{1};  // 3^-level
  BigInt count{1};
};

/// Boxes of side 3^-level on the origin-anchored grid that the graph of
/// f_level passes through. A box counts when the graph meets its interior;
/// touching only a corner or an edge does not count. This is the
/// convention under which the hand counts for levels 0, 1, 2 are 1, 5, 25.
/// Throws ResourceError above kMaxBoxLevel.
BoxCountReport box_count(unsigned level);

/// log N / (level log 3) for the deepest report, evaluated in 192-bit
/// MPFR arithmetic. Throws ParameterError for an empty sequence or when
/// the deepest level is 0.
double dimension_estimate(std::span<const BoxCountReport> reports);

/// log_3 5 at double precision, computed the same way.
double log3_of_5();

/// One rectangle of the level-i cover E_i.
struct CoverRectangle {
  Rational x_lo;
  Rational x_hi;
  Rational y_lo;
  Rational y_hi;
  /// Ternary digits of the x-cell: x_lo = 0.d1d2...di in base 3.
  std::vector<Digit> digits;

  Rational width() const { return x_hi - x_lo; }
  Rational height() const { return y_hi - y_lo; }
  Rational area() const { return width() * height(); }
  bool contains(const Rational& x, const Rational& y) const {
    return x_lo <= x && x <= x_hi && y_lo <= y && y <= y_hi;
  }
};

/// The 3^i rectangles of E_i = w1(E_{i-1}) u w2(E_{i-1}) u w3(E_{i-1}),
/// E_0 = unit square, ordered left to right. Throws ResourceError above
/// kMaxCoverLevel.
std::vector<CoverRectangle> cover_level(unsigned level);

/// Product over the path of 2/5, 1/5, 2/5 for digits 0, 1, 2: the mass a
/// unit mass spread by area over E_0, E_1, ... assigns to the rectangle.
/// Throws ParameterError on a digit outside {0,1,2}.
Rational interval_mass(std::span<const Digit> digits);
/// Digits given as a string over "012"; throws ParseError otherwise.
std::vector<Digit> parse_digit_path(std::string_view text);

/// Masses of all 3^level cells, indexed by cell (k-th cell has the base-3
/// digits of k as its path).
struct MassMeasure {
  unsigned level = 0;
  std::vector<Rational> weights;

  Rational total() const;
};
MassMeasure mass_measure(unsigned level);

/// True iff every level-i cover rectangle U satisfies
/// mass(U) <= 5 |U|^(log_3 5), |U| the Euclidean diameter, with the
/// right-hand side rounded toward zero. Throws ParameterError for i = 0 and
/// ResourceError above kMaxMassCheckLevel.
bool mass_bound_check(unsigned level);

struct ArcLengthReport {
  unsigned level = 0;
  /// Sum of segment lengths of F_level, each square root rounded to nearest
  /// at 192 bits.
  BigFloat length;
  /// Exact dx^2 + dy^2 per segment.
  std::vector<Rational> segment_squares;
  /// Exact sum of |dx| + |dy| over segments, an upper bound on the length.
  Rational triangle_bound;
};

/// Length of the polyline through build_F_iterate(level).
/// Throws ResourceError above kMaxArcLevel.
ArcLengthReport arc_length(unsigned level);

/// sqrt(5)/2 at the same precision as arc_length.
BigFloat chord_length();

}  // namespace bourbaki
