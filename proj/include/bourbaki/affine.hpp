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

#include "bourbaki/rational.hpp"

namespace bourbaki {

/// v -> slope * v + intercept, exact.
struct AffineMap {
  Rational slope{1};
  Rational intercept{0};

  static AffineMap identity() { return {}; }
  Rational operator()(const Rational& v) const { return slope * v + intercept; }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// outer o inner.
AffineMap affine_compose(const AffineMap& outer, const AffineMap& inner);

/// The v with m(v) = v. Throws SingularMapError when the slope is 1.
Rational affine_fixed_point(const AffineMap& m);

/// maps[0] o maps[1] o ... o maps[n-1]; identity for an empty span.
/// Balanced reduction, so operand sizes stay proportional to the subrange.
AffineMap compose_all(std::span<const AffineMap> maps);

}  // namespace bourbaki
