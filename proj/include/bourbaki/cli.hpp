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

#include <iosfwd>
#include <string>
#include <vector>

#include "bourbaki/function.hpp"
#include "bourbaki/tables.hpp"

namespace bourbaki::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Dispatches one command line (args[0] is the program name). Output goes to
/// `out`, diagnostics to `err`. Returns 0, 1 on invalid input, 2 when a
/// verification fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "p/q (d.ddddddddddd)" with 12 significant digits.
std::string format_value(const Rational& r);

/// Header x_num,x_den,y_num,y_den then one row per breakpoint, LF endings.
std::string to_csv(const detail::GridTable& table);

/// Single polyline in a 900x900 viewBox, y flipped, 2-unit margin.
std::string to_svg(const detail::GridTable& table);

}  // namespace bourbaki::cli
