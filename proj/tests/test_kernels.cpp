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

#include <omp.h>

#include <cmath>
#include <vector>

#include "doctest.h"

#include "bourbaki/antiderivative.hpp"
#include "bourbaki/errors.hpp"
#include "bourbaki/function.hpp"
#include "bourbaki/kernels.hpp"
#include "bourbaki/random.hpp"

using namespace bourbaki;

namespace {

Rational q(long p, long d) { return Rational(BigInt(p), BigInt(d)); }
std::vector<Rational> vec(std::span<const Rational> s) { return {s.begin(), s.end()}; }

struct ThreadScope {
  explicit ThreadScope(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadScope() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_CASE("serial and parallel kernels agree") {
  ThreadScope threads(4);

  SUBCASE("tree composition") {
    SplitMix64 rng(7);
    std::vector<AffineMap> maps;
    for (int k = 0; k < 5000; ++k) maps.push_back({rng.unit_rational(50) - q(1, 2), rng.unit_rational(50)});
    CHECK(kernels::compose_tree_parallel(maps) == kernels::compose_fold_serial(maps));
    const std::span<const AffineMap> few(maps.data(), 3);
    CHECK(kernels::compose_tree_parallel(few) == kernels::compose_fold_serial(few));
  }

  SUBCASE("segment refinement") {
    std::vector<Rational> values{0, 1};
    for (int level = 0; level < 8; ++level) {
      const auto serial = kernels::refine_segments_serial(values, q(2, 3), q(1, 3));
      CHECK(kernels::refine_segments_parallel(values, q(2, 3), q(1, 3)) == serial);
      values = serial;
    }
    CHECK(values == vec(build_iterate(8).values()));
  }

  SUBCASE("antiderivative refinement") {
    std::vector<Rational> values{0, q(1, 2)};
    for (int level = 0; level < 7; ++level) {
      const auto serial = kernels::refine_thirds_serial(values);
      CHECK(kernels::refine_thirds_parallel(values) == serial);
      values = serial;
    }
    CHECK(values == vec(build_F_iterate(7).values()));
    CHECK_THROWS_AS(kernels::refine_thirds_serial(std::vector<Rational>{0, q(1, 3)}), ConsistencyError);
  }

  SUBCASE("box counting and arc length") {
    const IterateTable f = build_iterate(8);
    CHECK(kernels::count_boxes_parallel(f.values(), 8) == kernels::count_boxes_serial(f.values(), 8));
    const AntiderivativeTable F = build_F_iterate(9);
    const auto squares = kernels::segment_squares_serial(F.values(), 9);
    CHECK(kernels::segment_squares_parallel(F.values(), 9) == squares);
    const BigFloat gap = sub(kernels::sum_sqrt_parallel(squares, 192), kernels::sum_sqrt_serial(squares, 192), MPFR_RNDN);
    CHECK(std::abs(gap.to_double()) < 1e-45);
  }

  SUBCASE("mass bound") {
    std::vector<kernels::MassCell> cells;
    for (int k = 1; k <= 300; ++k) cells.push_back({q(1, 5 * k), q(1, 3 * k), q(1, 3 * k)});
    const BigFloat lo = BigFloat::from_int(1);
    const BigFloat hi = BigFloat::from_int(2);
    CHECK(kernels::mass_bound_parallel(cells, 5, lo, hi) == kernels::mass_bound_serial(cells, 5, lo, hi));
    cells.push_back({Rational(4), q(1, 2), q(1, 2)});
    CHECK_FALSE(kernels::mass_bound_serial(cells, 5, lo, hi));
    CHECK_FALSE(kernels::mass_bound_parallel(cells, 5, lo, hi));
  }
}

TEST_CASE("parallel results do not depend on thread count") {
  const auto reference = [] {
    ThreadScope one(1);
    return kernels::sum_sqrt_parallel(kernels::segment_squares_parallel(build_F_iterate(10).values(), 10), 192);
  }();
  for (int n : {2, 3, 8}) {
    ThreadScope threads(n);
    CHECK(kernels::sum_sqrt_parallel(kernels::segment_squares_parallel(build_F_iterate(10).values(), 10), 192) ==
          reference);
  }
}
