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

#include "bourbaki/tables.hpp"

#include <utility>

#include "bourbaki/errors.hpp"

namespace bourbaki {

FamilyParam::FamilyParam(Rational a) : a_(std::move(a)) {
  if (a_ <= Rational(0) || a_ >= Rational(1)) throw ParameterError("family parameter " + a_.str() + " outside (0,1)");
}

namespace detail {

GridTable::GridTable(unsigned level, std::vector<Rational> values) : level_(level), values_(std::move(values)) {
  if (BigInt(static_cast<unsigned long>(values_.size())) != pow3(level_) + 1) {
    throw ParameterError("table of level " + std::to_string(level_) + " needs 3^level + 1 breakpoints");
  }
}

Rational GridTable::x(std::size_t k) const { return Rational(BigInt(static_cast<unsigned long>(k)), pow3(level_)); }

Rational GridTable::interpolate(const Rational& x) const {
  if (x < Rational(0) || x > Rational(1)) throw DomainError("argument " + x.str() + " outside [0,1]");
  const Rational scaled = x * Rational(pow3(level_));
  const BigInt cell = scaled.floor();
  const std::size_t k = cell.get_ui();
  if (k + 1 >= values_.size()) return values_.back();
  const Rational frac = scaled - Rational(cell);
  return values_[k] + frac * (values_[k + 1] - values_[k]);
}

}  // namespace detail
}  // namespace bourbaki
