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

#include "bourbaki/function.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "bourbaki/errors.hpp"
#include "bourbaki/kernels.hpp"

namespace bourbaki {
namespace {

const Rational& third() {
  static const Rational value(BigInt(1), BigInt(3));
  return value;
}

void check_unit_interval(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) throw DomainError("argument " + x.str() + " outside [0,1]");
}

// Split seg into thirds and keep the one containing x.
IterateSegment descend(const IterateSegment& seg, const Rational& x, const Rational& a) {
  const Rational width = (seg.x_hi - seg.x_lo) * third();
  const Rational rise = seg.y_at_hi - seg.y_at_lo;
  const std::array<Rational, 4> ys{seg.y_at_lo, seg.y_at_lo + a * rise, seg.y_at_lo + (Rational(1) - a) * rise,
                                   seg.y_at_hi};
  BigInt cell = ((x - seg.x_lo) / width).floor();
  const unsigned long j = std::min(cell.get_ui(), 2UL);
  IterateSegment next;
  next.level = seg.level + 1;
  next.x_lo = seg.x_lo + Rational(static_cast<long>(j)) * width;
  next.x_hi = next.x_lo + width;
  next.y_at_lo = ys[j];
  next.y_at_hi = ys[j + 1];
  return next;
}

std::array<AffineMap, 3> digit_maps(const FamilyParam& param) {
  return {digit_step_map(0, param), digit_step_map(1, param), digit_step_map(2, param)};
}

std::vector<AffineMap> maps_for(const std::vector<Digit>& digits, const std::array<AffineMap, 3>& maps) {
  std::vector<AffineMap> out;
  out.reserve(digits.size());
  for (Digit d : digits) out.push_back(maps[d]);
  return out;
}

Rational two_pow(unsigned e) { return Rational(pow(BigInt(2), e)); }
Rational three_pow(unsigned e) { return Rational(pow3(e)); }

}  // namespace

IterateTable build_iterate(unsigned level, const FamilyParam& param) {
  if (level > kMaxTableLevel) {
    throw ResourceError("iterate level " + std::to_string(level) + " above cap " + std::to_string(kMaxTableLevel));
  }
  std::vector<Rational> values{Rational(0), Rational(1)};
  const Rational& a = param.a();
  const Rational b = Rational(1) - a;
  for (unsigned i = 0; i < level; ++i) values = kernels::refine_segments_parallel(values, a, b);
  return IterateTable(level, std::move(values), param);
}

Rational eval_iterate(const IterateTable& table, const Rational& x) { return table.interpolate(x); }

Rational eval_iterate(const AntiderivativeTable& table, const Rational& x) { return table.interpolate(x); }

IterateSegment containing_segment(unsigned level, const Rational& x, const FamilyParam& param) {
  check_unit_interval(x);
  IterateSegment seg;
  for (unsigned i = 0; i < level; ++i) seg = descend(seg, x, param.a());
  return seg;
}

PlanePoint ifs_map_point(int n, const PlanePoint& p) {
  switch (n) {
    case 1:
      return {p.x * third(), Rational(2) * p.y * third()};
    case 2:
      return {(Rational(2) - p.x) * third(), (Rational(1) + p.y) * third()};
    case 3:
      return {(Rational(2) + p.x) * third(), (Rational(1) + Rational(2) * p.y) * third()};
    default:
      throw ParameterError("IFS map index must be 1, 2 or 3");
  }
}

IterateTable ifs_refine(const IterateTable& table) {
  if (!table.param().is_classical()) throw ParameterError("IFS refinement is defined for a = 2/3 only");
  const std::size_t n = table.size();
  std::vector<PlanePoint> images(3 * n);
  const auto total = static_cast<std::ptrdiff_t>(3 * n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < total; ++j) {
    const auto k = static_cast<std::size_t>(j) % n;
    const int map = static_cast<int>(static_cast<std::size_t>(j) / n) + 1;
    images[static_cast<std::size_t>(j)] = ifs_map_point(map, table.breakpoint(k));
  }
  // w2 reverses orientation, so the merged list needs sorting by x.
  std::stable_sort(images.begin(), images.end(), [](const PlanePoint& p, const PlanePoint& q) { return p.x < q.x; });
  std::vector<Rational> values;
  values.reserve(3 * n - 2);
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (j > 0 && images[j].x == images[j - 1].x) {
      if (images[j].y != images[j - 1].y) throw ConsistencyError("IFS images disagree at a shared endpoint");
      continue;
    }
    values.push_back(images[j].y);
  }
  IterateTable refined(table.level() + 1, std::move(values), table.param());
  for (std::size_t j = 0, k = 0; j < images.size(); ++j) {
    if (j > 0 && images[j].x == images[j - 1].x) continue;
    if (images[j].x != refined.x(k++)) throw ConsistencyError("IFS images off the refined grid");
  }
  return refined;
}

AffineMap digit_step_map(Digit d, const FamilyParam& param) {
  const Rational& a = param.a();
  switch (d) {
    case 0:
      return {a, Rational(0)};
    case 1:
      return {Rational(1) - Rational(2) * a, a};
    case 2:
      return {a, Rational(1) - a};
    default:
      throw ParameterError("ternary digit outside {0,1,2}");
  }
}

Rational eval_exact(const Rational& x, const FamilyParam& param) {
  const TernaryExpansion e = to_ternary(x);
  const auto maps = digit_maps(param);
  Rational tail_value(0);
  if (!e.terminates()) {
    const std::vector<AffineMap> cycle_maps = maps_for(e.period(), maps);
    const AffineMap cycle = compose_all(cycle_maps);
    if (cycle.slope.abs() >= Rational(1)) throw ConsistencyError("periodic digit cycle is not a contraction");
    tail_value = affine_fixed_point(cycle);
  }
  const std::vector<AffineMap> head = maps_for(e.preperiod(), maps);
  return compose_all(head)(tail_value);
}

Enclosure approx_eval(const Rational& x, const Rational& tol) {
  if (tol <= Rational(0)) throw ParameterError("tolerance must be positive");
  check_unit_interval(x);
  const Rational a = FamilyParam::classical().a();
  IterateSegment seg;
  while (true) {
    if (x == seg.x_lo) return {seg.y_at_lo, seg.y_at_lo};
    if (x == seg.x_hi) return {seg.y_at_hi, seg.y_at_hi};
    if (seg.height() <= tol) return {seg.y_min(), seg.y_max()};
    seg = descend(seg, x, a);
  }
}

Enclosure approx_eval(std::string_view decimal, const Rational& tol) {
  return approx_eval(Rational::parse_decimal(decimal), tol);
}

ValueCase parse_value_case(std::string_view text) {
  static constexpr std::array<std::string_view, 6> names{"i", "ii", "iii", "iv", "v", "vi"};
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (text == names[k]) return static_cast<ValueCase>(k);
  }
  throw ParseError("unknown case '" + std::string(text) + "' (expected i..vi)");
}

std::string_view to_string(ValueCase c) {
  static constexpr std::array<std::string_view, 6> names{"i", "ii", "iii", "iv", "v", "vi"};
  return names[static_cast<std::size_t>(c)];
}

ClosedForm closed_form_value(ValueCase c, unsigned i, std::optional<unsigned> j) {
  if (i == 0) throw ParameterError("closed forms require i > 0");
  const Rational p3 = three_pow(i);
  const Rational p2 = two_pow(i);
  const Rational p2m = two_pow(i - 1);
  auto needs_j = [&]() {
    if (!j || *j <= i) throw ParameterError("cases v and vi require j > i");
    return *j - i;
  };
  switch (c) {
    case ValueCase::i:
      return {Rational(1) / (p3 + 1), p2 / (p3 + p2)};
    case ValueCase::ii:
      return {Rational(1) / (p3 - 1), p2 / (p3 + p2m)};
    case ValueCase::iii:
      return {Rational(2) / (p3 + 1), p2m / (p3 - p2m)};
    case ValueCase::iv:
      return {Rational(2) / (p3 - 1), p2m / (p3 - p2)};
    case ValueCase::v: {
      const unsigned m = needs_j();
      const Rational scale = pow(Rational(BigInt(2), BigInt(3)), i);
      return {Rational(1) / (three_pow(*j) + p3), scale * two_pow(m) / (three_pow(m) + two_pow(m))};
    }
    case ValueCase::vi: {
      const unsigned m = needs_j();
      const Rational scale = pow(Rational(BigInt(2), BigInt(3)), i);
      return {Rational(1) / (three_pow(*j) - p3), scale * two_pow(m) / (three_pow(m) + two_pow(m - 1))};
    }
  }
  throw ParameterError("unknown closed-form case");
}

}  // namespace bourbaki
