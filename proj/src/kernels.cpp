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

#include "bourbaki/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstddef>

#include "bourbaki/errors.hpp"

namespace bourbaki::kernels {
namespace {

using Index = std::ptrdiff_t;

// Below this many maps the tree reduction does not spawn tasks.
constexpr std::size_t kTaskCutoff = 2048;
// Fixed block size for ordered MPFR reductions; independent of thread count.
constexpr std::size_t kSumBlock = 4096;

// v -> (slope * v + intercept) / scale with integer parts, so composing
// never reduces a fraction.
struct ScaledMap {
  BigInt slope;
  BigInt intercept;
  BigInt scale;
};

ScaledMap to_scaled(const AffineMap& m) {
  BigInt scale;
  mpz_lcm(scale.get_mpz_t(), m.slope.den().get_mpz_t(), m.intercept.den().get_mpz_t());
  return {m.slope.num() * (scale / m.slope.den()), m.intercept.num() * (scale / m.intercept.den()), scale};
}

ScaledMap compose_scaled(const ScaledMap& outer, const ScaledMap& inner) {
  return {outer.slope * inner.slope, outer.slope * inner.intercept + outer.intercept * inner.scale,
          outer.scale * inner.scale};
}

ScaledMap tree_serial(std::span<const AffineMap> maps) {
  if (maps.size() == 1) return to_scaled(maps.front());
  const std::size_t mid = maps.size() / 2;
  return compose_scaled(tree_serial(maps.first(mid)), tree_serial(maps.subspan(mid)));
}

ScaledMap tree(std::span<const AffineMap> maps) {
  if (maps.size() <= kTaskCutoff) return tree_serial(maps);
  const std::size_t mid = maps.size() / 2;
  ScaledMap left;
  ScaledMap right;
#pragma omp task shared(left)
  left = tree(maps.first(mid));
  right = tree(maps.subspan(mid));
#pragma omp taskwait
  return compose_scaled(left, right);
}

AffineMap from_scaled(const ScaledMap& m) {
  return {Rational(m.slope, m.scale), Rational(m.intercept, m.scale)};
}

Rational third_value(int digit, const Rational& t, const Rational& F) {
  static const Rational two_ninths(BigInt(2), BigInt(9));
  static const Rational ninth(BigInt(1), BigInt(9));
  static const Rational five_halves(BigInt(5), BigInt(2));
  switch (digit) {
    case 0:
      return two_ninths * F;
    case 1:
      return ninth * (Rational(1) + Rational(2) * t - F);
    default:
      return ninth * (five_halves + t) + two_ninths * F;
  }
}

void check_table(std::span<const Rational> values) {
  if (values.size() < 2) throw ParameterError("table needs at least two breakpoints");
}

unsigned long column_boxes(const Rational& a, const Rational& b, const BigInt& scale) {
  const Rational lo = std::min(a, b) * Rational(scale);
  const Rational hi = std::max(a, b) * Rational(scale);
  BigInt rows = hi.ceil() - lo.floor();
  if (rows == 0) rows = 1;  // flat segment along a grid line
  return rows.get_ui();
}

bool cell_passes(const MassCell& cell, long scale, const BigFloat& exponent_lo, const BigFloat& exponent_hi) {
  const Rational diam_sq = cell.width * cell.width + cell.height * cell.height;
  const BigFloat diam = sqrt(diam_sq, MPFR_RNDD);
  // x^s is decreasing in s for x < 1, increasing for x >= 1.
  const BigFloat& exponent = diam.compare(Rational(1)) < 0 ? exponent_hi : exponent_lo;
  const BigFloat bound = mul(BigFloat::from_int(scale), pow(diam, exponent, MPFR_RNDD), MPFR_RNDD);
  return bound.compare(cell.mass) >= 0;
}

}  // namespace

AffineMap compose_fold_serial(std::span<const AffineMap> maps) {
  AffineMap acc = AffineMap::identity();
  for (const AffineMap& m : maps) acc = affine_compose(acc, m);
  return acc;
}

AffineMap compose_tree_parallel(std::span<const AffineMap> maps) {
  if (maps.empty()) return AffineMap::identity();
  if (maps.size() <= kTaskCutoff || omp_in_parallel()) return from_scaled(tree_serial(maps));
  ScaledMap result;
#pragma omp parallel
#pragma omp single
  result = tree(maps);
  return from_scaled(result);
}

std::vector<Rational> refine_segments_serial(std::span<const Rational> values, const Rational& first,
                                             const Rational& second) {
  check_table(values);
  const std::size_t segments = values.size() - 1;
  std::vector<Rational> out(3 * segments + 1);
  for (std::size_t k = 0; k < segments; ++k) {
    const Rational rise = values[k + 1] - values[k];
    out[3 * k] = values[k];
    out[3 * k + 1] = values[k] + first * rise;
    out[3 * k + 2] = values[k] + second * rise;
  }
  out.back() = values.back();
  return out;
}

std::vector<Rational> refine_segments_parallel(std::span<const Rational> values, const Rational& first,
                                               const Rational& second) {
  check_table(values);
  const auto segments = static_cast<Index>(values.size() - 1);
  std::vector<Rational> out(3 * values.size() - 2);
#pragma omp parallel for schedule(static)
  for (Index k = 0; k < segments; ++k) {
    const Rational rise = values[k + 1] - values[k];
    out[3 * k] = values[k];
    out[3 * k + 1] = values[k] + first * rise;
    out[3 * k + 2] = values[k] + second * rise;
  }
  out.back() = values.back();
  return out;
}

std::vector<Rational> refine_thirds_serial(std::span<const Rational> values) {
  check_table(values);
  const std::size_t n = values.size() - 1;
  std::vector<Rational> out(3 * n + 1);
  for (int d = 0; d < 3; ++d) {
    for (std::size_t k = 0; k <= n; ++k) {
      Rational v = third_value(d, Rational(BigInt(k), BigInt(n)), values[k]);
      const std::size_t slot = d * n + k;
      if (k == 0 && d > 0) {
        if (out[slot] != v) throw ConsistencyError("adjacent thirds disagree at a shared endpoint");
        continue;
      }
      out[slot] = std::move(v);
    }
  }
  for (std::size_t k = 0; k <= n; ++k) {
    if (out[3 * k] != values[k]) throw ConsistencyError("refined table moved an existing breakpoint");
  }
  return out;
}

std::vector<Rational> refine_thirds_parallel(std::span<const Rational> values) {
  check_table(values);
  const std::size_t n = values.size() - 1;
  const auto total = static_cast<Index>(3 * n + 3);
  std::vector<Rational> images(static_cast<std::size_t>(total));
  // images[d*(n+1) + k] is the image of breakpoint k in third d.
#pragma omp parallel for schedule(static)
  for (Index j = 0; j < total; ++j) {
    const auto d = static_cast<int>(j / static_cast<Index>(n + 1));
    const auto k = static_cast<std::size_t>(j % static_cast<Index>(n + 1));
    images[static_cast<std::size_t>(j)] = third_value(d, Rational(BigInt(k), BigInt(n)), values[k]);
  }
  std::vector<Rational> out(3 * n + 1);
  std::atomic<bool> consistent{true};
#pragma omp parallel for schedule(static)
  for (Index s = 0; s < static_cast<Index>(3 * n + 1); ++s) {
    const auto slot = static_cast<std::size_t>(s);
    const std::size_t d = std::min<std::size_t>(slot / n, 2);
    const std::size_t k = slot - d * n;
    out[slot] = images[d * (n + 1) + k];
    if (k == 0 && d > 0 && images[(d - 1) * (n + 1) + n] != out[slot]) consistent = false;
    if (slot % 3 == 0 && out[slot] != values[slot / 3]) consistent = false;
  }
  if (!consistent) throw ConsistencyError("antiderivative refinement produced inconsistent breakpoints");
  return out;
}

BigInt count_boxes_serial(std::span<const Rational> values, unsigned level) {
  check_table(values);
  const BigInt scale = pow3(level);
  BigInt count = 0;
  for (std::size_t k = 0; k + 1 < values.size(); ++k) count += column_boxes(values[k], values[k + 1], scale);
  return count;
}

BigInt count_boxes_parallel(std::span<const Rational> values, unsigned level) {
  check_table(values);
  const BigInt scale = pow3(level);
  const auto segments = static_cast<Index>(values.size() - 1);
  unsigned long long count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (Index k = 0; k < segments; ++k) count += column_boxes(values[k], values[k + 1], scale);
  return BigInt(static_cast<unsigned long>(count));
}

std::vector<Rational> segment_squares_serial(std::span<const Rational> values, unsigned level) {
  check_table(values);
  const Rational dx(BigInt(1), pow3(level));
  const Rational dx_sq = dx * dx;
  std::vector<Rational> out;
  out.reserve(values.size() - 1);
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    const Rational dy = values[k + 1] - values[k];
    out.push_back(dx_sq + dy * dy);
  }
  return out;
}

std::vector<Rational> segment_squares_parallel(std::span<const Rational> values, unsigned level) {
  check_table(values);
  const Rational dx(BigInt(1), pow3(level));
  const Rational dx_sq = dx * dx;
  const auto segments = static_cast<Index>(values.size() - 1);
  std::vector<Rational> out(values.size() - 1);
#pragma omp parallel for schedule(static)
  for (Index k = 0; k < segments; ++k) {
    const Rational dy = values[k + 1] - values[k];
    out[k] = dx_sq + dy * dy;
  }
  return out;
}

BigFloat sum_sqrt_serial(std::span<const Rational> squares, mpfr_prec_t precision) {
  BigFloat total(precision);
  for (const Rational& sq : squares) total = add(total, sqrt(sq, MPFR_RNDN, precision), MPFR_RNDN);
  return total;
}

BigFloat sum_sqrt_parallel(std::span<const Rational> squares, mpfr_prec_t precision) {
  const std::size_t blocks = (squares.size() + kSumBlock - 1) / kSumBlock;
  std::vector<BigFloat> partial(blocks, BigFloat(precision));
#pragma omp parallel for schedule(dynamic, 1)
  for (Index b = 0; b < static_cast<Index>(blocks); ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kSumBlock;
    const std::size_t end = std::min(squares.size(), begin + kSumBlock);
    BigFloat acc(precision);
    for (std::size_t k = begin; k < end; ++k) acc = add(acc, sqrt(squares[k], MPFR_RNDN, precision), MPFR_RNDN);
    partial[static_cast<std::size_t>(b)] = std::move(acc);
  }
  BigFloat total(precision);
  for (const BigFloat& p : partial) total = add(total, p, MPFR_RNDN);
  return total;
}

bool mass_bound_serial(std::span<const MassCell> cells, long scale, const BigFloat& exponent_lo,
                       const BigFloat& exponent_hi) {
  return std::all_of(cells.begin(), cells.end(), [&](const MassCell& c) {
    return cell_passes(c, scale, exponent_lo, exponent_hi);
  });
}

bool mass_bound_parallel(std::span<const MassCell> cells, long scale, const BigFloat& exponent_lo,
                         const BigFloat& exponent_hi) {
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (Index k = 0; k < static_cast<Index>(cells.size()); ++k) {
    ok = ok && cell_passes(cells[static_cast<std::size_t>(k)], scale, exponent_lo, exponent_hi);
  }
  return ok;
}

}  // namespace bourbaki::kernels
