// Copyright 2026 The metafib Authors
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

#include "metafib/codes.hpp"
#include "metafib/compositions.hpp"

using namespace metafib;

static void BM_EnumerateCodes(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_codes(n));
    }
}
BENCHMARK(BM_EnumerateCodes)->DenseRange(8, 16, 4);

static void BM_GreedyCounts(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    const Level h = ceil_log2(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_counts(n, h));
    }
}
BENCHMARK(BM_GreedyCounts)->Range(64, 4096);

static void BM_CompositionCounts(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_compositions_upto(Shift(2), n));
    }
}
BENCHMARK(BM_CompositionCounts)->Range(256, 4096);

BENCHMARK_MAIN();
