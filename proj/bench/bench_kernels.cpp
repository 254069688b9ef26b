/* Copyright 2026 The mzvgenus Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Serial reference vs OpenMP kernel, side by side.
#include <benchmark/benchmark.h>

#include "mzvgenus/genus.hpp"
#include "mzvgenus/numeric.hpp"

namespace {

using namespace mzvgenus;

void BM_TransitionSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transition_to_monomial_serial(Basis::elementary, n));
}

void BM_TransitionParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_row_cache();
    benchmark::DoNotOptimize(transition_to_monomial(Basis::elementary, n));
  }
}

// Both genus variants share the row cache; clearing it keeps the work comparable.
void BM_GenusSerial(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_row_cache();
    benchmark::DoNotOptimize(q_genus_serial(i));
  }
}

void BM_GenusParallel(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_row_cache();
    benchmark::DoNotOptimize(q_genus(i));
  }
}

const std::vector<Word>& batch_words() {
  static const std::vector<Word> words = [] {
    std::vector<Word> out;
    for (int n = 4; n <= 8; ++n)
      for (const auto& w : words_of_weight(n))
        if (w.front() >= 2 && w.depth() <= 2) out.push_back(w);
    return out;
  }();
  return words;
}

void BM_MzvBatchSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mzv_batch_serial(batch_words(), 1e-6));
}

void BM_MzvBatchParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mzv_batch(batch_words(), 1e-6));
}

void BM_PowerSumSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(power_partial_sum_serial(3, state.range(0)));
}

void BM_PowerSumParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(power_partial_sum(3, state.range(0)));
}

}  // namespace

BENCHMARK(BM_TransitionSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransitionParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenusSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenusParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MzvBatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MzvBatchParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerSumSerial)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerSumParallel)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
