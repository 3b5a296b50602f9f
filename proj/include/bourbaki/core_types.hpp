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

#include "bourbaki/rational.hpp"

namespace bourbaki {

/// Parameter a in (0,1) of the Okamoto family. The classical Bourbaki
/// function is a = 2/3: the refinement inserts values at fractions a and 1-a
/// of each segment's rise.
class FamilyParam {
 public:
  /// Throws ParameterError unless 0 < a < 1.
  explicit FamilyParam(Rational a);
  static FamilyParam classical() { return FamilyParam(Rational(BigInt(2), BigInt(3))); }

  const Rational& a() const { return a_; }
  bool is_classical() const { return a_ == classical().a(); }

  friend bool operator==(const FamilyParam&, const FamilyParam&) = default;

 private:
  Rational a_;
};

/// A point of the unit square.
struct PlanePoint {
  Rational x;
  Rational y;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

}  // namespace bourbaki
