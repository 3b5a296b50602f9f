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

#include <cstddef>
#include <span>
#include <vector>

#include "bourbaki/core_types.hpp"
#include "bourbaki/rational.hpp"

namespace bourbaki {

// Largest table level; 3^13 + 1 = 1,594,324 breakpoints.
inline constexpr unsigned kMaxTableLevel = 13;

namespace detail {

// Values of a continuous piecewise-linear function on the grid x = k/3^level,
// k = 0..3^level. The x-coordinates are implied by the level.
class GridTable {
 public:
  /// Throws ParameterError unless values.size() == 3^level + 1.
  GridTable(unsigned level, std::vector<Rational> values);

  unsigned level() const { return level_; }
  std::size_t size() const { return values_.size(); }
  Rational x(std::size_t k) const;
  const Rational& y(std::size_t k) const { return values_[k]; }
  PlanePoint breakpoint(std::size_t k) const { return {x(k), values_[k]}; }
  std::span<const Rational> values() const { return values_; }

  /// Exact linear interpolation. Throws DomainError outside [0,1].
  Rational interpolate(const Rational& x) const;

  friend bool operator==(const GridTable&, const GridTable&) = default;

 private:
  unsigned level_;
  std::vector<Rational> values_;
};

}  // namespace detail

/// Breakpoints of the level-i iterate f_i of a family member.
class IterateTable : public detail::GridTable {
 public:
  IterateTable(unsigned level, std::vector<Rational> values, FamilyParam param)
      : GridTable(level, std::move(values)), param_(std::move(param)) {}

  const FamilyParam& param() const { return param_; }

  friend bool operator==(const IterateTable&, const IterateTable&) = default;

 private:
  FamilyParam param_;
};

/// Breakpoints of the level-i iterate F_i of the antiderivative.
class AntiderivativeTable : public detail::GridTable {
 public:
  using GridTable::GridTable;

  friend bool operator==(const AntiderivativeTable&, const AntiderivativeTable&) = default;
};

}  // namespace bourbaki
