/*
   Copyright 2026 The ciwidth Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference kernels against the OpenMP ones on the table operating points.

#include <benchmark/benchmark.h>

#include "ciwidth/simulate.hpp"

using namespace ciwidth;

namespace {

SimConfig config(int family) {
    switch (family) {
        case 0: return {10000, 1, {NormalFamily{1.0}, 0.05, 0.8, 0.0625}, 4010};
        case 1: return {10000, 1, {PoissonFamily{0.01}, 0.05, 0.8, 0.001}, 158936};
        default: return {10000, 1, {BinomialFamily{0.25}, 0.05, 0.8, 0.05}, 1182};
    }
}

void BM_Serial(benchmark::State& state) {
    const SimConfig cfg = config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::simulate(cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.nsim));
}

void BM_Parallel(benchmark::State& state) {
    const SimConfig cfg = config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(simulate(cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.nsim));
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
