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

#include "bourbaki/affine.hpp"

#include "bourbaki/errors.hpp"
#include "bourbaki/kernels.hpp"

namespace bourbaki {

AffineMap affine_compose(const AffineMap& outer, const AffineMap& inner) {
  return {outer.slope * inner.slope, outer.slope * inner.intercept + outer.intercept};
}

Rational affine_fixed_point(const AffineMap& m) {
  if (m.slope == Rational(1)) throw SingularMapError("affine map with slope 1 has no unique fixed point");
  return m.intercept / (Rational(1) - m.slope);
}

AffineMap compose_all(std::span<const AffineMap> maps) { return kernels::compose_tree_parallel(maps); }

}  // namespace bourbaki
