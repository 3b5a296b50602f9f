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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bourbaki {

enum class Suite { all, symmetry, scaling, integrals, geometry, family };

/// "all", "symmetry", ...; throws ParseError otherwise.
Suite parse_suite(std::string_view text);
std::string_view to_string(Suite s);

struct VerifyFailure {
  std::string check;
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<VerifyFailure> failures;
  long long elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  /// Random cases per randomized check. Checks with a fixed enumeration
  /// (closed forms, table agreement, geometry levels) ignore it, and the
  /// derivative and family checks use cases/10.
  std::size_t cases = 1000;
  std::uint64_t seed = 42;
};

/// Runs every identity check of the suite. Inputs are drawn serially from a
/// SplitMix64 stream seeded per check; evaluation may use worker threads,
/// but failures are reported in case order, so the report is a pure
/// function of (suite, options) apart from elapsed_ms.
VerifyReport run_suite(Suite suite, const VerifyOptions& options);

/// JSON object with keys suite, cases, failures[, elapsed_ms] in that order.
std::string to_json(const VerifyReport& report, bool include_timing);

}  // namespace bourbaki
