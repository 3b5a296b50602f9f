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

#include <benchmark/benchmark.h>

#include <vector>

#include "bourbaki/antiderivative.hpp"
#include "bourbaki/function.hpp"
#include "bourbaki/kernels.hpp"
#include "bourbaki/random.hpp"
#include "bourbaki/ternary.hpp"

namespace {

using namespace bourbaki;

const Rational kFirst(BigInt(2), BigInt(3));
const Rational kSecond(BigInt(1), BigInt(3));

std::vector<AffineMap> period_maps(long den) {
  const TernaryExpansion e = to_ternary(Rational(BigInt(1), BigInt(den)));
  std::vector<AffineMap> maps;
  for (Digit d : e.period()) maps.push_back(digit_step_map(d));
  return maps;
}

std::vector<Rational> values_of(std::span<const Rational> s) { return {s.begin(), s.end()}; }

void BM_ComposeSerial(benchmark::State& state) {
  const auto maps = period_maps(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::compose_fold_serial(maps));
}

void BM_ComposeParallel(benchmark::State& state) {
  const auto maps = period_maps(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::compose_tree_parallel(maps));
}

void BM_RefineSerial(benchmark::State& state) {
  const auto values = values_of(build_iterate(static_cast<unsigned>(state.range(0))).values());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::refine_segments_serial(values, kFirst, kSecond));
}

void BM_RefineParallel(benchmark::State& state) {
  const auto values = values_of(build_iterate(static_cast<unsigned>(state.range(0))).values());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::refine_segments_parallel(values, kFirst, kSecond));
}

void BM_ThirdsSerial(benchmark::State& state) {
  const auto values = values_of(build_F_iterate(static_cast<unsigned>(state.range(0))).values());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::refine_thirds_serial(values));
}

void BM_ThirdsParallel(benchmark::State& state) {
  const auto values = values_of(build_F_iterate(static_cast<unsigned>(state.range(0))).values());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::refine_thirds_parallel(values));
}

void BM_BoxesSerial(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  const auto values = values_of(build_iterate(level).values());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_boxes_serial(values, level));
}

void BM_BoxesParallel(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  const auto values = values_of(build_iterate(level).values());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_boxes_parallel(values, level));
}

void BM_ArcSerial(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  const auto values = values_of(build_F_iterate(level).values());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sum_sqrt_serial(kernels::segment_squares_serial(values, level), 192));
}

void BM_ArcParallel(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  const auto values = values_of(build_F_iterate(level).values());
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::sum_sqrt_parallel(kernels::segment_squares_parallel(values, level), 192));
}

}  // namespace

BENCHMARK(BM_ComposeSerial)->Arg(1093)->Arg(9973);
BENCHMARK(BM_ComposeParallel)->Arg(1093)->Arg(9973);
BENCHMARK(BM_RefineSerial)->Arg(8)->Arg(10);
BENCHMARK(BM_RefineParallel)->Arg(8)->Arg(10);
BENCHMARK(BM_ThirdsSerial)->Arg(8)->Arg(10);
BENCHMARK(BM_ThirdsParallel)->Arg(8)->Arg(10);
BENCHMARK(BM_BoxesSerial)->Arg(8)->Arg(10);
BENCHMARK(BM_BoxesParallel)->Arg(8)->Arg(10);
BENCHMARK(BM_ArcSerial)->Arg(8)->Arg(10);
BENCHMARK(BM_ArcParallel)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
