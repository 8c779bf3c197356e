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

#include "vlcnoma/analytic.hpp"
#include "vlcnoma/units.hpp"

using namespace vlcnoma;

namespace {

AnalyticModel model(FeedbackKind kind)
{
    return AnalyticModel(LedGeometry::make(2.0, deg_to_rad(60.0), 1e-4, deg_to_rad(50.0)),
                         MobilityConfig::symmetric(0.0, 10.0, deg_to_rad(25.0), 20),
                         FeedbackScheme{kind, 1.0, deg_to_rad(5.0)});
}

} // namespace

static void BM_CdfUnordered(benchmark::State& state)
{
    const UnorderedGainDistribution dist(model(FeedbackKind::FullCsi));
    const double x = 1e-12;
    for (auto _ : state)
        benchmark::DoNotOptimize(dist.cdf(x));
}
BENCHMARK(BM_CdfUnordered);

static void BM_CdfOrdered(benchmark::State& state)
{
    const UnorderedGainDistribution dist(model(FeedbackKind::FullCsi));
    for (auto _ : state)
        benchmark::DoNotOptimize(dist.ordered_cdf(1e-12, 10, 10));
}
BENCHMARK(BM_CdfOrdered);

static void BM_CdfGroupInstant(benchmark::State& state)
{
    const GroupGainDistribution dist(model(FeedbackKind::TwoBitInstant), GroupVariant::Instant);
    for (auto _ : state)
        benchmark::DoNotOptimize(dist.cdf(1e-11, GroupRole::Strong));
}
BENCHMARK(BM_CdfGroupInstant);

static void BM_CdfGroupMean(benchmark::State& state)
{
    const GroupGainDistribution dist(model(FeedbackKind::TwoBitMean), GroupVariant::Mean);
    const auto role = state.range(0) == 0 ? GroupRole::Weak : GroupRole::Strong;
    for (auto _ : state)
        benchmark::DoNotOptimize(dist.cdf(1e-12, role));
}
BENCHMARK(BM_CdfGroupMean)->Arg(0)->Arg(1);
