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

#include "bourbaki/geometry.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bourbaki/antiderivative.hpp"
#include "bourbaki/core_types.hpp"
#include "bourbaki/errors.hpp"
#include "bourbaki/function.hpp"
#include "bourbaki/kernels.hpp"

namespace bourbaki {
namespace {

void check_cap(unsigned level, unsigned cap, const char* what) {
  if (level > cap) {
    throw ResourceError(std::string(what) + " level " + std::to_string(level) + " above cap " + std::to_string(cap));
  }
}

const Rational& child_weight(Digit d) {
  static const Rational outer(BigInt(2), BigInt(5));
  static const Rational middle(BigInt(1), BigInt(5));
  return d == 1 ? middle : outer;
}

CoverRectangle map_rectangle(int n, const CoverRectangle& r) {
  const PlanePoint p = ifs_map_point(n, {r.x_lo, r.y_lo});
  const PlanePoint q = ifs_map_point(n, {r.x_hi, r.y_hi});
  CoverRectangle out;
  out.x_lo = std::min(p.x, q.x);
  out.x_hi = std::max(p.x, q.x);
  out.y_lo = std::min(p.y, q.y);
  out.y_hi = std::max(p.y, q.y);
  out.digits.reserve(r.digits.size() + 1);
  out.digits.push_back(static_cast<Digit>(n - 1));
  for (Digit d : r.digits) out.digits.push_back(n == 2 ? static_cast<Digit>(2 - d) : d);
  return out;
}

// log_3 5 bracketed by directed rounding.
std::pair<BigFloat, BigFloat> log3_5_bracket() {
  const BigFloat five = BigFloat::from_int(5);
  const BigFloat three = BigFloat::from_int(3);
  BigFloat lo = div(log(five, MPFR_RNDD), log(three, MPFR_RNDU), MPFR_RNDD);
  BigFloat hi = div(log(five, MPFR_RNDU), log(three, MPFR_RNDD), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

}  // namespace

BoxCountReport box_count(unsigned level) {
  check_cap(level, kMaxBoxLevel, "box-count");
  const IterateTable table = build_iterate(level);
  return {level, Rational(BigInt(1), pow3(level)), kernels::count_boxes_parallel(table.values(), level)};
}

double dimension_estimate(std::span<const BoxCountReport> reports) {
  if (reports.empty()) throw ParameterError("dimension estimate needs at least one box count");
  const auto deepest = std::max_element(reports.begin(), reports.end(),
                                        [](const BoxCountReport& a, const BoxCountReport& b) { return a.level < b.level; });
  if (deepest->level == 0) throw ParameterError("dimension estimate needs a box count at level >= 1");
  const BigFloat count(Rational(deepest->count), MPFR_RNDN);
  const BigFloat scale(Rational(BigInt(3)), MPFR_RNDN);
  const BigFloat denominator = mul(BigFloat::from_int(static_cast<long>(deepest->level)), log(scale, MPFR_RNDN), MPFR_RNDN);
  return div(log(count, MPFR_RNDN), denominator, MPFR_RNDN).to_double();
}

double log3_of_5() {
  return div(log(BigFloat::from_int(5), MPFR_RNDN), log(BigFloat::from_int(3), MPFR_RNDN), MPFR_RNDN).to_double();
}

std::vector<CoverRectangle> cover_level(unsigned level) {
  check_cap(level, kMaxCoverLevel, "cover");
  std::vector<CoverRectangle> rects{CoverRectangle{Rational(0), Rational(1), Rational(0), Rational(1), {}}};
  for (unsigned i = 0; i < level; ++i) {
    std::vector<CoverRectangle> next;
    next.reserve(3 * rects.size());
    for (const auto& r : rects) next.push_back(map_rectangle(1, r));
    // w2 reverses x, so its images come out right to left.
    for (auto it = rects.rbegin(); it != rects.rend(); ++it) next.push_back(map_rectangle(2, *it));
    for (const auto& r : rects) next.push_back(map_rectangle(3, r));
    rects = std::move(next);
  }
  return rects;
}

Rational interval_mass(std::span<const Digit> digits) {
  Rational mass(1);
  for (Digit d : digits) {
    if (d > 2) throw ParameterError("digit outside {0,1,2} in mass path");
    mass *= child_weight(d);
  }
  return mass;
}

std::vector<Digit> parse_digit_path(std::string_view text) {
  std::vector<Digit> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '2') throw ParseError("digit path must use only 0, 1, 2: '" + std::string(text) + "'");
    digits.push_back(static_cast<Digit>(c - '0'));
  }
  return digits;
}

Rational MassMeasure::total() const {
  Rational sum(0);
  for (const Rational& w : weights) sum += w;
  return sum;
}

MassMeasure mass_measure(unsigned level) {
  check_cap(level, kMaxCoverLevel, "mass");
  std::vector<Rational> weights{Rational(1)};
  for (unsigned i = 0; i < level; ++i) {
    std::vector<Rational> next;
    next.reserve(3 * weights.size());
    for (const Rational& w : weights) {
      for (Digit d = 0; d < 3; ++d) next.push_back(w * child_weight(d));
    }
    weights = std::move(next);
  }
  return {level, std::move(weights)};
}

bool mass_bound_check(unsigned level) {
  if (level == 0) throw ParameterError("mass bound check requires level >= 1");
  check_cap(level, kMaxMassCheckLevel, "mass-bound");
  const std::vector<CoverRectangle> rects = cover_level(level);
  std::vector<kernels::MassCell> cells;
  cells.reserve(rects.size());
  for (const auto& r : rects) cells.push_back({interval_mass(r.digits), r.width(), r.height()});
  const auto [lo, hi] = log3_5_bracket();
  return kernels::mass_bound_parallel(cells, 5, lo, hi);
}

ArcLengthReport arc_length(unsigned level) {
  check_cap(level, kMaxArcLevel, "arc-length");
  const AntiderivativeTable table = build_F_iterate(level);
  ArcLengthReport report;
  report.level = level;
  report.segment_squares = kernels::segment_squares_parallel(table.values(), level);
  report.length = kernels::sum_sqrt_parallel(report.segment_squares, BigFloat::kDefaultPrecision);
  Rational rise(0);
  const auto values = table.values();
  for (std::size_t k = 0; k + 1 < values.size(); ++k) rise += (values[k + 1] - values[k]).abs();
  report.triangle_bound = Rational(1) + rise;
  return report;
}

BigFloat chord_length() { return sqrt(Rational(BigInt(5), BigInt(4)), MPFR_RNDN); }

}  // namespace bourbaki
