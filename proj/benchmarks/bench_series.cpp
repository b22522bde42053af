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

#include "metafib/series.hpp"
#include "metafib/words.hpp"

using namespace metafib;

static void BM_DsSum(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf_Ds_sum(Shift(2), order));
    }
}
BENCHMARK(BM_DsSum)->Range(256, 4096);

static void BM_DsNested(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    unsigned depth = 1;
    while ((std::size_t{1} << depth) <= order) {
        ++depth;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf_Ds_nested(Shift(2), order, depth));
    }
}
BENCHMARK(BM_DsNested)->Range(256, 4096);

static void BM_AsProduct(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf_As(Shift(2), order));
    }
}
BENCHMARK(BM_AsProduct)->Range(256, 4096);

static void BM_DwordPrefix(benchmark::State& state) {
    const auto length = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dword_prefix(Shift(3), length));
    }
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DwordPrefix)->Range(1 << 10, 1 << 20);

BENCHMARK_MAIN();
