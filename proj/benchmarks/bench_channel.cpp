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

#include "vlcnoma/channel_model.hpp"
#include "vlcnoma/random.hpp"
#include "vlcnoma/units.hpp"
#include "vlcnoma/user_population.hpp"

using namespace vlcnoma;

static void BM_ChannelGain(benchmark::State& state)
{
    const auto geom = LedGeometry::make(2.0, deg_to_rad(60.0), 1e-4, deg_to_rad(50.0));
    const auto mob = MobilityConfig::symmetric(0.0, 10.0, deg_to_rad(25.0), 20);
    CounterRng rng(1);
    const auto user = sample_user(mob, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(channel_gain(geom, user));
}
BENCHMARK(BM_ChannelGain);

static void BM_SamplePopulation(benchmark::State& state)
{
    const auto geom = LedGeometry::make(2.0, deg_to_rad(60.0), 1e-4, deg_to_rad(50.0));
    const auto mob = MobilityConfig::symmetric(0.0, 10.0, deg_to_rad(25.0), static_cast<int>(state.range(0)));
    const RandomStreams streams(7);
    std::uint64_t trial = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_population(mob, geom, streams, trial++));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SamplePopulation)->Arg(20)->Arg(200);
