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
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "vlcnoma/errors.hpp"
#include "vlcnoma/random.hpp"
#include "vlcnoma/scheduler.hpp"
#include "vlcnoma/units.hpp"

using namespace vlcnoma;

namespace {

LedGeometry default_geometry()
{
    return LedGeometry::make(2.0, deg_to_rad(60.0), 1e-4, deg_to_rad(50.0));
}

PopulationSnapshot snapshot_with_gains(std::vector<double> gains)
{
    PopulationSnapshot s;
    s.users.assign(gains.size(), ReceiverState{1.0, kPi / 2, kPi / 2});
    s.mean_gains = gains;
    s.true_gains = std::move(gains);
    return s;
}

PopulationSnapshot snapshot_with_distances(std::vector<double> distances)
{
    std::vector<ReceiverState> users;
    for (double d : distances)
        users.push_back({d, kPi / 2, kPi / 2});
    return make_snapshot(std::move(users), default_geometry());
}

// The user whose instantaneous incidence angle equals theta at distance d.
ReceiverState user_at(double d, double theta, double ell = 2.0)
{
    const double phi = kPi - std::atan2(ell, d) - theta;
    return {d, phi, phi};
}

} // namespace

TEST(FeedbackKindNames, RoundTrip)
{
    for (auto kind : {FeedbackKind::FullCsi, FeedbackKind::MeanAngle, FeedbackKind::DistanceOnly,
                      FeedbackKind::TwoBitInstant, FeedbackKind::TwoBitMean,
                      FeedbackKind::OneBitDistance})
        EXPECT_EQ(parse_feedback_kind(to_string(kind)), kind);
    EXPECT_FALSE(parse_feedback_kind("three-bit").has_value());
    EXPECT_TRUE(is_group_kind(FeedbackKind::TwoBitMean));
    EXPECT_FALSE(is_group_kind(FeedbackKind::MeanAngle));
}

TEST(OrderFullCsi, Examples)
{
    EXPECT_TRUE(order_full_csi(snapshot_with_gains({0.0, 0.0, 0.0})).empty());
    EXPECT_EQ(order_full_csi(snapshot_with_gains({0.0, 3e-6, 1e-6})), (Ordering{2, 1}));
    EXPECT_EQ(order_full_csi(snapshot_with_gains({2e-6, 1e-6, 2e-6})), (Ordering{1, 0, 2}));
}

TEST(OrderFullCsi, AgreesWithNaiveSort)
{
    const auto geom = default_geometry();
    const auto mob = MobilityConfig::symmetric(0.0, 10.0, deg_to_rad(25.0), 20);
    const RandomStreams streams(99);
    for (std::uint64_t t = 0; t < 200; ++t) {
        const auto snap = sample_population(mob, geom, streams, t);
        std::vector<std::pair<double, std::size_t>> naive;
        for (std::size_t k = 0; k < snap.size(); ++k)
            if (snap.true_gains[k] > 0)
                naive.emplace_back(snap.true_gains[k], k);
        std::sort(naive.begin(), naive.end());
        Ordering expected;
        for (const auto& [g, k] : naive)
            expected.push_back(k);
        EXPECT_EQ(order_full_csi(snap), expected);
    }
}

TEST(OrderMeanGain, CoincidesWithFullCsiWithoutDeviation)
{
    const auto geom = default_geometry();
    const auto mob = MobilityConfig::symmetric(0.0, 10.0, 0.0, 20);
    const RandomStreams streams(5);
    for (std::uint64_t t = 0; t < 200; ++t) {
        const auto snap = sample_population(mob, geom, streams, t);
        EXPECT_EQ(order_mean_gain(snap), order_full_csi(snap));
    }
}

TEST(OrderMeanGain, MayScheduleUserOutsideFieldOfView)
{
    const auto geom = default_geometry();
    // Mean angle points at the LED, the instantaneous angle is 60 degrees off.
    const auto below = user_at(0.0, 0.0);
    ReceiverState u{0.0, below.mean_phi, below.mean_phi - deg_to_rad(60.0)};
    const auto snap = make_snapshot({u, user_at(3.0, 0.0)}, geom);
    const auto order = order_mean_gain(snap);
    ASSERT_EQ(order.size(), 2u);
    EXPECT_EQ(snap.true_gains[0], 0.0);
    EXPECT_EQ(order_full_csi(snap).size(), 1u);
}

TEST(OrderMeanGain, DiffersFromFullCsiWithDeviation)
{
    const auto geom = default_geometry();
    const auto mob = MobilityConfig::symmetric(0.0, 10.0, deg_to_rad(25.0), 20);
    const RandomStreams streams(6);
    int differ = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
        const auto snap = sample_population(mob, geom, streams, t);
        differ += order_mean_gain(snap) != order_full_csi(snap);
    }
    EXPECT_GT(differ, 0);
}

TEST(OrderDistance, Examples)
{
    EXPECT_EQ(order_distance(snapshot_with_distances({1, 9, 5})), (Ordering{1, 2, 0}));
    EXPECT_EQ(order_distance(snapshot_with_distances({4, 4, 4})), (Ordering{0, 1, 2}));
}

TEST(OrderDistance, RankOneIsFarthestUser)
{
    const auto geom = default_geometry();
    const auto mob = MobilityConfig::symmetric(0.0, 10.0, deg_to_rad(25.0), 20);
    const RandomStreams streams(8);
    for (std::uint64_t t = 0; t < 100; ++t) {
        const auto snap = sample_population(mob, geom, streams, t);
        const auto order = order_distance(snap);
        ASSERT_EQ(order.size(), snap.size());
        const auto far = std::max_element(snap.users.begin(), snap.users.end(),
                                          [](auto& a, auto& b) { return a.d < b.d; });
        EXPECT_EQ(order.front(), static_cast<std::size_t>(far - snap.users.begin()));
    }
}

TEST(SelectIndividual, Examples)
{
    Ordering nine(9);
    std::iota(nine.begin(), nine.end(), std::size_t{0});
    EXPECT_FALSE(select_individual(nine, 1, 10).transmits());
    EXPECT_EQ(select_individual(nine, 1, 10).nonzero_count, 9u);

    Ordering fifteen(15);
    std::iota(fifteen.begin(), fifteen.end(), std::size_t{100});
    const auto d = select_individual(fifteen, 1, 10);
    ASSERT_TRUE(d.transmits());
    EXPECT_EQ(*d.weak, 100u);
    EXPECT_EQ(*d.strong, 109u);

    const auto two = select_individual(Ordering{4, 7}, 1, 2);
    ASSERT_TRUE(two.transmits());
    EXPECT_EQ(*two.weak, 4u);
    EXPECT_EQ(*two.strong, 7u);

    EXPECT_FALSE(select_individual(Ordering{4, 7}, 1, 2, 3).transmits());
    EXPECT_THROW(select_individual(fifteen, 3, 3), DomainError);
}

TEST(TwoBitFeedback, Examples)
{
    const double ell = 2.0;
    FeedbackScheme s{FeedbackKind::TwoBitInstant, 1.0, deg_to_rad(5.0)};
    // Boundaries are inclusive.
    auto edge = user_at(1.0, deg_to_rad(5.0));
    EXPECT_EQ(two_bit_feedback(edge, s, ell), (TwoBitReport{true, true}));
    EXPECT_EQ(two_bit_feedback(user_at(3.0, deg_to_rad(20.0)), s, ell), (TwoBitReport{false, false}));
    EXPECT_EQ(two_bit_feedback(user_at(0.5, deg_to_rad(3.0)), s, ell), (TwoBitReport{true, true}));
    EXPECT_EQ(two_bit_feedback(user_at(0.5, deg_to_rad(-3.0)), s, ell), (TwoBitReport{true, true}));
}

TEST(TwoBitFeedback, MeanVariantUsesMeanAngle)
{
    FeedbackScheme s{FeedbackKind::TwoBitMean, 1.0, deg_to_rad(5.0)};
    auto u = user_at(0.5, 0.0);
    u.phi += deg_to_rad(20.0);
    EXPECT_EQ(two_bit_feedback(u, s, 2.0), (TwoBitReport{true, true}));
    s.kind = FeedbackKind::TwoBitInstant;
    EXPECT_EQ(two_bit_feedback(u, s, 2.0), (TwoBitReport{true, false}));
}

TEST(OneBitFeedback, Examples)
{
    EXPECT_TRUE(one_bit_feedback(0.0, 1.0));
    EXPECT_FALSE(one_bit_feedback(2.0, 1.0));
    EXPECT_TRUE(one_bit_feedback(0.99, 1.0));
    EXPECT_TRUE(one_bit_feedback(1.0, 1.0));
}

TEST(GroupUsers, Examples)
{
    const std::vector<GroupReport> all_strong(4, TwoBitReport{true, true});
    EXPECT_TRUE(group_users(all_strong).weak_group.empty());
    EXPECT_EQ(group_users(all_strong).strong_group.size(), 4u);

    const std::vector<GroupReport> mixed{TwoBitReport{false, false}, TwoBitReport{true, true},
                                         TwoBitReport{true, false}, std::nullopt,
                                         TwoBitReport{false, true}};
    const auto g = group_users(mixed);
    EXPECT_EQ(g.weak_group, (std::vector<std::size_t>{0}));
    EXPECT_EQ(g.strong_group, (std::vector<std::size_t>{1}));
}

TEST(GroupUsers, WeakMembersAreFarAndOffAxis)
{
    const auto geom = default_geometry();
    const auto mob = MobilityConfig::symmetric(0.0, 10.0, deg_to_rad(25.0), 20);
    const FeedbackScheme s{FeedbackKind::TwoBitInstant, 1.0, deg_to_rad(5.0)};
    const RandomStreams streams(12);
    for (std::uint64_t t = 0; t < 200; ++t) {
        const auto snap = sample_population(mob, geom, streams, t);
        const auto g = group_users(collect_group_feedback(snap, s, geom));
        for (auto k : g.weak_group) {
            const auto& u = snap.users[k];
            EXPECT_GT(u.d, 1.0);
            EXPECT_GT(std::abs(incidence_angle(u.d, u.phi, geom.ell)), deg_to_rad(5.0));
            EXPECT_GT(snap.true_gains[k], 0.0); // reporters are inside the FOV
        }
        for (auto k : g.strong_group) {
            const auto& u = snap.users[k];
            EXPECT_LE(u.d, 1.0);
            EXPECT_LE(std::abs(incidence_angle(u.d, u.phi, geom.ell)), deg_to_rad(5.0));
        }
    }
}

TEST(CollectGroupFeedback, OneBitDuplicatesDistanceBit)
{
    const auto geom = default_geometry();
    const auto snap = snapshot_with_distances({0.5, 3.0});
    const FeedbackScheme s{FeedbackKind::OneBitDistance, 1.0, 0.0};
    const auto r = collect_group_feedback(snap, s, geom);
    ASSERT_TRUE(r[0] && r[1]);
    EXPECT_EQ(*r[0], (TwoBitReport{true, true}));
    EXPECT_EQ(*r[1], (TwoBitReport{false, false}));
}

TEST(SelectGroupPair, SingletonAndEmptyGroups)
{
    CounterRng rng(1);
    auto d = select_group_pair({{3}, {8}}, rng);
    ASSERT_TRUE(d.transmits());
    EXPECT_EQ(*d.weak, 3u);
    EXPECT_EQ(*d.strong, 8u);

    d = select_group_pair({{3, 4}, {}}, rng);
    EXPECT_TRUE(d.weak.has_value());
    EXPECT_FALSE(d.strong.has_value());
    EXPECT_FALSE(d.transmits());
}

TEST(SelectGroupPair, UniformWithinGroup)
{
    CounterRng rng(77);
    const GroupAssignment g{{0, 1, 2, 3, 4}, {5, 6, 7}};
    std::array<int, 8> counts{};
    const int n = 80000;
    for (int t = 0; t < n; ++t) {
        const auto d = select_group_pair(g, rng);
        ++counts[*d.weak];
        ++counts[*d.strong];
    }
    double chi_weak = 0.0;
    for (int k = 0; k < 5; ++k)
        chi_weak += std::pow(counts[k] - n / 5.0, 2) / (n / 5.0);
    double chi_strong = 0.0;
    for (int k = 5; k < 8; ++k)
        chi_strong += std::pow(counts[k] - n / 3.0, 2) / (n / 3.0);
    // 99.9% quantiles of chi-square with 4 and 2 degrees of freedom.
    EXPECT_LT(chi_weak, 18.47);
    EXPECT_LT(chi_strong, 13.82);
}

TEST(FeedbackScheme, Validation)
{
    const auto geom = default_geometry();
    EXPECT_NO_THROW((FeedbackScheme{FeedbackKind::FullCsi, 0.0, 0.0}.validate(geom)));
    EXPECT_THROW((FeedbackScheme{FeedbackKind::TwoBitMean, 0.0, 0.1}.validate(geom)), DomainError);
    EXPECT_THROW((FeedbackScheme{FeedbackKind::TwoBitMean, 1.0, 1.0}.validate(geom)), DomainError);
    EXPECT_NO_THROW((FeedbackScheme{FeedbackKind::OneBitDistance, 1.0, 0.0}.validate(geom)));
}
