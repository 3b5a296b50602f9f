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

#include <cstdint>
#include <span>
#include <vector>

#include "bourbaki/rational.hpp"

namespace bourbaki {

using Digit = std::uint8_t;

/// Eventually periodic base-3 expansion 0.(preperiod)(period)(period)... of a
/// number in [0,1]. An empty period means the expansion terminates.
///
/// The constructor only checks that the digits are well formed: every digit
/// is 0, 1 or 2 and a nonempty period is not all zeros. Canonical form is
/// what to_ternary produces; see is_canonical().
class TernaryExpansion {
 public:
  TernaryExpansion() = default;
  /// Throws ParameterError on a digit outside {0,1,2} or an all-zero period.
  TernaryExpansion(std::vector<Digit> preperiod, std::vector<Digit> period);

  const std::vector<Digit>& preperiod() const { return preperiod_; }
  const std::vector<Digit>& period() const { return period_; }
  bool terminates() const { return period_.empty(); }

  /// Minimal period, no trailing zero on a terminating expansion, and the
  /// preperiod cannot be shortened by rotating the period.
  bool is_canonical() const;

  friend bool operator==(const TernaryExpansion&, const TernaryExpansion&) = default;

 private:
  std::vector<Digit> preperiod_;
  std::vector<Digit> period_;
};

/// Canonical expansion of x in [0,1] by base-3 long division. The value 1 is
/// 0.222... . Throws DomainError outside [0,1].
TernaryExpansion to_ternary(const Rational& x);

/// Exact value of the expansion.
Rational from_ternary(const TernaryExpansion& e);

/// Exact value of a finite digit string 0.d1d2...dn.
Rational from_digits(std::span<const Digit> digits);

/// Tails t_j = frac(3^j x) for j = 0..count, where t_0 = x. The digit
/// sequence of x is recovered as d_j = 3 t_{j-1} - t_j. For x = 1 the tails
/// are all 1 (the 0.222... convention).
std::vector<Rational> ternary_tails(const Rational& x, std::size_t count);

}  // namespace bourbaki
