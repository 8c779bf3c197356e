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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "vlcnoma/errors.hpp"
#include "vlcnoma/experiment.hpp"
#include "vlcnoma/units.hpp"

using namespace vlcnoma;

namespace {

ExperimentConfig base_config()
{
    ExperimentConfig c;
    c.label = "test";
    c.geom = LedGeometry::make(2.0, deg_to_rad(60.0), 1e-4, deg_to_rad(50.0));
    c.mobility = MobilityConfig::symmetric(0.0, 10.0, deg_to_rad(25.0), 20);
    c.noma = NomaConfig{PowerAllocation::make(0.984375, 0.015625), TargetRates::make(2.0, 10.0),
                        OmaRateModel::TimeShared};
    c.strategy = SchedulingStrategy{SchedulingStrategy::Kind::Individual, 1, 10};
    c.schemes = {FeedbackKind::FullCsi, FeedbackKind::MeanAngle, FeedbackKind::DistanceOnly};
    c.d_threshold = 1.0;
    c.theta_threshold = deg_to_rad(5.0);
    c.gamma_db = {150.0, 200.0, 250.0, 300.0};
    c.trials = 3000;
    c.root_seed = 2024;
    c.workers = 1;
    return c;
}

ExperimentConfig group_config()
{
    auto c = base_config();
    c.strategy.kind = SchedulingStrategy::Kind::Group;
    c.schemes = {FeedbackKind::TwoBitInstant, FeedbackKind::TwoBitMean, FeedbackKind::OneBitDistance};
    return c;
}

void expect_same_curves(const std::vector<Curve>& a, const std::vector<Curve>& b)
{
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t c = 0; c < a.size(); ++c) {
        EXPECT_EQ(a[c].label, b[c].label);
        ASSERT_EQ(a[c].points.size(), b[c].points.size());
        for (std::size_t k = 0; k < a[c].points.size(); ++k) {
            EXPECT_EQ(a[c].points[k].sum_rate, b[c].points[k].sum_rate);
            EXPECT_EQ(a[c].points[k].ci_halfwidth, b[c].points[k].ci_halfwidth);
            EXPECT_EQ(a[c].points[k].conditioning_rate, b[c].points[k].conditioning_rate);
        }
    }
}

} // namespace

TEST(RunSweep, CurveLabels)
{
    const auto curves = run_sweep(base_config());
    ASSERT_EQ(curves.size(), 4u);
    EXPECT_EQ(curves[0].label, "noma-full-csi");
    EXPECT_EQ(curves[1].label, "noma-mean-angle");
    EXPECT_EQ(curves[2].label, "noma-distance-only");
    EXPECT_EQ(curves[3].label, "oma-full-csi");
    auto no_oma = base_config();
    no_oma.include_oma = false;
    EXPECT_EQ(run_sweep(no_oma).size(), 3u);
}

TEST(RunSweep, IndependentOfWorkerCount)
{
    for (auto cfg : {base_config(), group_config()}) {
        cfg.trials = 5000;
        cfg.workers = 1;
        const auto one = run_sweep(cfg);
        cfg.workers = 3;
        const auto three = run_sweep(cfg);
        cfg.workers = 8;
        const auto eight = run_sweep(cfg);
        expect_same_curves(one, three);
        expect_same_curves(one, eight);
    }
}

TEST(RunSweep, SeedChangesResult)
{
    auto cfg = base_config();
    const auto a = run_sweep(cfg);
    cfg.root_seed += 1;
    const auto b = run_sweep(cfg);
    EXPECT_NE(a[0].points[1].sum_rate, b[0].points[1].sum_rate);
}

TEST(RunSweep, MatchesTrialByTrialRecount)
{
    const auto cfg = base_config();
    const auto curves = run_sweep(cfg);
    for (std::size_t g = 0; g < cfg.gamma_db.size(); ++g) {
        const auto eta = eta_thresholds(cfg.noma.targets, cfg.noma.alloc, db_to_linear(cfg.gamma_db[g]));
        double total = 0.0;
        std::uint64_t conditioned = 0;
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            const auto s = run_trial(cfg, t)[0];
            if (!s.conditioned)
                continue;
            ++conditioned;
            total += 2.0 * (s.weak_gain_sq > eta.eta_weak) + 10.0 * (s.strong_gain_sq > eta.eta_strong);
        }
        EXPECT_NEAR(curves[0].points[g].sum_rate, total / double(conditioned), 1e-12);
        EXPECT_NEAR(curves[0].points[g].conditioning_rate, double(conditioned) / double(cfg.trials), 1e-15);
    }
}

TEST(RunSweep, FullCsiPlateau)
{
    auto cfg = base_config();
    cfg.gamma_db = {400.0};
    const auto curves = run_sweep(cfg);
    EXPECT_DOUBLE_EQ(curves[0].points[0].sum_rate, 12.0);
    EXPECT_EQ(curves[0].points[0].ci_halfwidth, 0.0);
    EXPECT_DOUBLE_EQ(curves[3].points[0].sum_rate, 12.0);
}

TEST(RunSweep, SingleTrialConfidenceInterval)
{
    auto cfg = base_config();
    cfg.trials = 1;
    cfg.mobility.d_max = 1.0; // keep every user inside the FOV so the trial is conditioned
    cfg.mobility.mean_phi_min = deg_to_rad(85.0);
    cfg.mobility.mean_phi_max = deg_to_rad(95.0);
    cfg.mobility.delta_phi = 0.0;
    const auto curves = run_sweep(cfg);
    const auto& p = curves[0].points[0];
    ASSERT_FALSE(p.flagged);
    EXPECT_NEAR(p.ci_halfwidth, 1.96 * 6.0, 1e-12);
}

TEST(RunSweep, UnconditionedPointsAreFlagged)
{
    auto cfg = base_config();
    cfg.trials = 10;
    cfg.mobility.num_users = 10;
    cfg.mobility.d_min = 9.0; // far users are almost never all inside the FOV
    const auto curves = run_sweep(cfg);
    EXPECT_TRUE(curves[0].points[0].flagged);
    EXPECT_TRUE(std::isnan(curves[0].points[0].sum_rate));
}

TEST(RunTrial, IndividualPairsAreOrderedByTrueGain)
{
    auto cfg = base_config();
    cfg.mobility.delta_phi = 0.0;
    for (std::uint64_t t = 0; t < 500; ++t) {
        const auto s = run_trial(cfg, t);
        ASSERT_EQ(s.size(), 3u);
        if (s[0].conditioned) {
            EXPECT_GT(s[0].weak_gain_sq, 0.0);
            EXPECT_LE(s[0].weak_gain_sq, s[0].strong_gain_sq);
            // Without angle deviation mean-angle feedback is exact.
            EXPECT_EQ(s[1].weak_gain_sq, s[0].weak_gain_sq);
            EXPECT_EQ(s[1].strong_gain_sq, s[0].strong_gain_sq);
        }
        EXPECT_TRUE(s[2].conditioned); // distance ordering always has K users
    }
}

TEST(RunTrial, NoisyFeedbackIsEvaluatedOnTrueGains)
{
    auto cfg = base_config();
    cfg.noise = NoiseConfig{0.05, deg_to_rad(2.5)};
    const RandomStreams streams(cfg.root_seed);
    int differ = 0;
    for (std::uint64_t t = 0; t < 300; ++t) {
        const auto truth = sample_population(cfg.mobility, cfg.geom, streams, t);
        const auto s = run_trial(cfg, t)[0];
        if (!s.conditioned)
            continue;
        const auto has = [&](double g) {
            return std::any_of(truth.true_gains.begin(), truth.true_gains.end(), [&](double h) { return h * h == g; });
        };
        EXPECT_TRUE(has(s.weak_gain_sq));
        EXPECT_TRUE(has(s.strong_gain_sq));
        auto clean = cfg;
        clean.noise.reset();
        const auto c = run_trial(clean, t)[0];
        differ += c.conditioned && (c.strong_gain_sq != s.strong_gain_sq);
    }
    EXPECT_GT(differ, 0);
}

TEST(RunTrial, GroupSchemesAndEmptyGroupPolicy)
{
    auto cfg = group_config();
    int unconditioned = 0;
    for (std::uint64_t t = 0; t < 500; ++t) {
        const auto s = run_trial(cfg, t);
        ASSERT_EQ(s.size(), 3u);
        for (const auto& p : s) {
            EXPECT_EQ(p.conditioned, p.has_weak && p.has_strong);
            unconditioned += !p.conditioned;
        }
    }
    EXPECT_GT(unconditioned, 0);
    cfg.strategy.empty_group = EmptyGroupPolicy::Outage;
    for (std::uint64_t t = 0; t < 100; ++t)
        for (const auto& p : run_trial(cfg, t))
            EXPECT_TRUE(p.conditioned);
}

TEST(ExperimentConfig, ValidationNamesField)
{
    auto expect_field = [](ExperimentConfig c, const std::string& field) {
        try {
            c.validate();
            ADD_FAILURE() << "expected ConfigError on " << field;
        } catch (const ConfigError& e) {
            EXPECT_EQ(e.field(), field);
        }
    };
    auto c = base_config();
    c.gamma_db.clear();
    expect_field(c, "sweep.gamma_db");
    c = base_config();
    c.gamma_db = {200.0, 150.0};
    expect_field(c, "sweep.gamma_db");
    c = base_config();
    c.strategy.rank_weak = 10;
    expect_field(c, "scheduling.rank_weak");
    c = base_config();
    c.strategy.rank_strong = 21;
    expect_field(c, "scheduling.rank_strong");
    c = base_config();
    c.trials = 0;
    expect_field(c, "sweep.trials");
    c = base_config();
    c.schemes.clear();
    expect_field(c, "scheduling.schemes");
}

TEST(EmpiricalCdf, SingleSample)
{
    const EmpiricalCdf f({2.5});
    EXPECT_EQ(f(2.4), 0.0);
    EXPECT_EQ(f(2.5), 1.0);
    EXPECT_EQ(f.left_limit(2.5), 0.0);
    EXPECT_EQ(f.quantile(0.3), 2.5);
    EXPECT_THROW(EmpiricalCdf({}), DomainError);
}

TEST(EmpiricalCdf, StepsAndQuantiles)
{
    const EmpiricalCdf f({3.0, 1.0, 2.0, 2.0});
    EXPECT_EQ(f(0.5), 0.0);
    EXPECT_EQ(f(1.0), 0.25);
    EXPECT_EQ(f(2.0), 0.75);
    EXPECT_EQ(f.left_limit(2.0), 0.25);
    EXPECT_EQ(f(10.0), 1.0);
    EXPECT_EQ(f.quantile(0.5), 2.0);
    EXPECT_EQ(f.quantile(1.0), 3.0);
}

TEST(EmpiricalCdf, ConvergesToUniformWithinDkwBound)
{
    CounterRng rng(8);
    std::vector<double> xs(100000);
    for (auto& x : xs)
        x = rng.uniform01();
    const EmpiricalCdf f(xs);
    double sup = 0.0;
    for (double v : f.sorted())
        sup = std::max({sup, std::abs(f(v) - v), std::abs(f.left_limit(v) - v)});
    EXPECT_LT(sup, std::sqrt(std::log(2.0 / 1e-3) / (2.0 * 100000)));
}
