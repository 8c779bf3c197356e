// SPDX-License-Identifier: Apache-2.0
//
// vlcnoma: NOMA link-level toolkit for mobile VLC users with random orientation
// Copyright (C) 2026 The vlcnoma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "vlcnoma/config.hpp"
#include "vlcnoma/experiment.hpp"

using namespace vlcnoma;

static void BM_RunTrial(benchmark::State& state)
{
    const auto run = load_preset(state.range(0) == 0 ? "fig2" : "fig3");
    const auto& config = run.series.back();
    std::uint64_t trial = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_trial(config, trial++));
}
BENCHMARK(BM_RunTrial)->Arg(0)->Arg(1);

static void BM_RunSweep(benchmark::State& state)
{
    auto config = load_preset("fig2").series.back();
    config.trials = 10000;
    config.workers = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_sweep(config));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.trials));
}
BENCHMARK(BM_RunSweep)->Unit(benchmark::kMillisecond);
