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

#include "metafib/sequences.hpp"
#include "metafib/tree_model.hpp"

using namespace metafib;

static void BM_RecurrenceTable(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        SequenceTable table(Shift(2));
        table.extend_to(n);
        benchmark::DoNotOptimize(table.a(n));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RecurrenceTable)->Range(1 << 10, 1 << 20);

static void BM_A0Fast(benchmark::State& state) {
    Index n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a0_fast(n));
        n = n * 6364136223846793005ULL + 1442695040888963407ULL;
        n >>= 20;
    }
}
BENCHMARK(BM_A0Fast);

static void BM_Descent(benchmark::State& state) {
    const Shift s(static_cast<std::uint32_t>(state.range(0)));
    Index n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a_by_descent(s, n));
        n = n % 1000003 + 7919;
    }
}
BENCHMARK(BM_Descent)->Arg(0)->Arg(3)->Arg(6);

static void BM_ViaA0(benchmark::State& state) {
    const Shift s(static_cast<std::uint32_t>(state.range(0)));
    Index n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a_via_a0(s, n));
        n = n % 1000003 + 7919;
    }
}
BENCHMARK(BM_ViaA0)->Arg(0)->Arg(3)->Arg(6);

static void BM_TreeOracle(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(leaf_prefix_counts(Shift(1), n));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TreeOracle)->Range(1 << 10, 1 << 16);

BENCHMARK_MAIN();
