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

// Data-parallel inner loops behind the public operations. Every OpenMP
// kernel has a serial reference that computes the same thing with a plain
// loop; the unit tests hold the two to exact agreement (or, for the MPFR
// sums, agreement far below the reported precision) and bench/ times them.
//
// All kernels are deterministic: outputs are written to preassigned slots
// and reductions are combined in index order.

#include <mpfr.h>

#include <cstdint>
#include <span>
#include <vector>

#include "bourbaki/affine.hpp"
#include "bourbaki/bigfloat.hpp"
#include "bourbaki/rational.hpp"

namespace bourbaki::kernels {

// maps[0] o ... o maps[n-1].
AffineMap compose_fold_serial(std::span<const AffineMap> maps);
AffineMap compose_tree_parallel(std::span<const AffineMap> maps);

// One step of segment refinement: every segment [y_k, y_{k+1}] gets interior
// values y_k + first*(y_{k+1}-y_k) and y_k + second*(y_{k+1}-y_k).
std::vector<Rational> refine_segments_serial(std::span<const Rational> values, const Rational& first,
                                             const Rational& second);
std::vector<Rational> refine_segments_parallel(std::span<const Rational> values, const Rational& first,
                                               const Rational& second);

// One step of the antiderivative construction: the whole table, read as
// F at t = k/n, is mapped into each third by
//   d=0: (2/9) F,   d=1: (1 + 2t - F)/9,   d=2: (5/2 + t)/9 + (2/9) F.
// Shared endpoints of adjacent thirds, and the previous level's values at
// the old grid points, must agree exactly; ConsistencyError otherwise.
std::vector<Rational> refine_thirds_serial(std::span<const Rational> values);
std::vector<Rational> refine_thirds_parallel(std::span<const Rational> values);

// Grid boxes of side 3^-level whose interior meets the polyline through
// (k/3^level, values[k]).
BigInt count_boxes_serial(std::span<const Rational> values, unsigned level);
BigInt count_boxes_parallel(std::span<const Rational> values, unsigned level);

// (1/3^level)^2 + (values[k+1]-values[k])^2 for every segment.
std::vector<Rational> segment_squares_serial(std::span<const Rational> values, unsigned level);
std::vector<Rational> segment_squares_parallel(std::span<const Rational> values, unsigned level);

// Sum of square roots, each rounded to nearest at `precision` bits.
BigFloat sum_sqrt_serial(std::span<const Rational> squares, mpfr_prec_t precision);
BigFloat sum_sqrt_parallel(std::span<const Rational> squares, mpfr_prec_t precision);

struct MassCell {
  Rational mass;
  Rational width;
  Rational height;
};

// True iff mass <= scale * diam^exponent for every cell, with the right-hand
// side rounded toward zero (a pass is never an artifact of rounding).
// exponent_lo/hi bracket the true exponent.
bool mass_bound_serial(std::span<const MassCell> cells, long scale, const BigFloat& exponent_lo,
                       const BigFloat& exponent_hi);
bool mass_bound_parallel(std::span<const MassCell> cells, long scale, const BigFloat& exponent_lo,
                         const BigFloat& exponent_hi);

}  // namespace bourbaki::kernels
