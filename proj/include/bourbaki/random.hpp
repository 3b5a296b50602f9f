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

#include "bourbaki/rational.hpp"

namespace bourbaki {

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden-ratio
/// increment 0x9E3779B97F4A7C15; output is the state passed through the
/// variant-13 finalizer (xor-shift 30, multiply 0xBF58476D1CE4E5B9,
/// xor-shift 27, multiply 0x94D049BB133111EB, xor-shift 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi] by modulo reduction.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }

  /// p/q in [0,1] with q drawn from [1, max_den] and p from [0, q], reduced.
  Rational unit_rational(std::uint64_t max_den) {
    const std::uint64_t q = between(1, max_den);
    const std::uint64_t p = between(0, q);
    return Rational(BigInt(static_cast<unsigned long>(p)), BigInt(static_cast<unsigned long>(q)));
  }

  /// k/3^i with i drawn from [1, max_level] and k from [0, 3^i].
  Rational ternary_rational(unsigned max_level) {
    const auto i = static_cast<unsigned>(between(1, max_level));
    const BigInt top = pow3(i);
    const std::uint64_t k = between(0, top.get_ui());
    return Rational(BigInt(static_cast<unsigned long>(k)), top);
  }

  /// p/q strictly inside (0,1), q drawn from [2, max_den].
  Rational open_unit_rational(std::uint64_t max_den) {
    const std::uint64_t q = between(2, max_den);
    const std::uint64_t p = between(1, q - 1);
    return Rational(BigInt(static_cast<unsigned long>(p)), BigInt(static_cast<unsigned long>(q)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace bourbaki
