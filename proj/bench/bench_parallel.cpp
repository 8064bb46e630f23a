/*
* Copyright (C) 2026 The nestedepi Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "nestedepi/coupling.hpp"
#include "nestedepi/interventions.hpp"
#include "nestedepi/sweeps.hpp"

#include <benchmark/benchmark.h>

namespace
{

using namespace nestedepi;

const BetweenHostParams& coupled_params()
{
    static const BetweenHostParams p = baseline_between_host_params(compute_Nh(baseline_within_host_params()).N_h);
    return p;
}

void heat_grid_bench(benchmark::State& state, Execution exec)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const AxisSpec x{"beta", 1e-6, 1e-4, n};
    const AxisSpec y{"d", 1e-3, 1e-1, n};
    for (auto _ : state) {
        benchmark::DoNotOptimize(heat_grid(coupled_params(), x, y, exec));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n));
}

void effectiveness_bench(benchmark::State& state, Execution exec)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            effectiveness_table(coupled_params(), baseline_within_host_params(), default_efficacy_levels, {}, exec));
    }
}

} // namespace

BENCHMARK_CAPTURE(heat_grid_bench, serial, Execution::serial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(heat_grid_bench, parallel, Execution::parallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(effectiveness_bench, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(effectiveness_bench, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
