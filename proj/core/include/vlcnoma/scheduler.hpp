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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vlcnoma/channel_model.hpp"
#include "vlcnoma/random.hpp"
#include "vlcnoma/user_population.hpp"

namespace vlcnoma {

enum class FeedbackKind {
    FullCsi,        // instantaneous gain, individual ordering
    MeanAngle,      // average gain from (d, mean_phi), individual ordering
    DistanceOnly,   // distance, individual ordering
    TwoBitInstant,  // group scheduling, bits from (d, theta)       -- Scheme I
    TwoBitMean,     // group scheduling, bits from (d, mean theta)  -- Scheme II
    OneBitDistance, // group scheduling, distance bit only
};

std::string_view to_string(FeedbackKind kind) noexcept;
std::optional<FeedbackKind> parse_feedback_kind(std::string_view name) noexcept;
bool is_group_kind(FeedbackKind kind) noexcept;

struct FeedbackScheme {
    FeedbackKind kind = FeedbackKind::FullCsi;
    double d_threshold = 0.0;     // d_th [m]
    double theta_threshold = 0.0; // theta_th [rad]

    /// Thresholds must be positive for the group kinds, with theta_th <= Theta.
    void validate(const LedGeometry& geom) const;
};

/// Users listed weak to strong.
using Ordering = std::vector<std::size_t>;

struct ScheduleDecision {
    std::optional<std::size_t> weak;
    std::optional<std::size_t> strong;
    std::size_t nonzero_count = 0;

    bool transmits() const noexcept { return weak.has_value() && strong.has_value(); }
};

enum class EmptyGroupPolicy {
    Condition, // trials with an empty weak or strong group are excluded and counted separately
    Outage,    // an empty group is an outage for that role; the other role is still served
};

/// User-selection strategy: individual ranks i < j among the ordered candidates, or
/// group-based pairing.
struct SchedulingStrategy {
    enum class Kind { Individual, Group };

    Kind kind = Kind::Individual;
    int rank_weak = 1;
    int rank_strong = 2;
    EmptyGroupPolicy empty_group = EmptyGroupPolicy::Condition;
};

struct TwoBitReport {
    bool distance_bit; // d <= d_th
    bool angle_bit;    // |theta| <= theta_th

    friend bool operator==(const TwoBitReport&, const TwoBitReport&) = default;
};

/// nullopt: the user does not take part in group scheduling.
using GroupReport = std::optional<TwoBitReport>;

struct GroupAssignment {
    std::vector<std::size_t> weak_group;   // (0, 0) reporters
    std::vector<std::size_t> strong_group; // (1, 1) reporters
};

// Individual orderings. Ties are broken by ascending user index.
Ordering order_full_csi(const PopulationSnapshot& snapshot);
Ordering order_mean_gain(const PopulationSnapshot& snapshot);
Ordering order_distance(const PopulationSnapshot& snapshot);

/// Picks ranks i < j (1-based) when the ordering has at least max(j, k_min) entries;
/// otherwise a no-transmission decision. k_min = 0 means j.
ScheduleDecision select_individual(const Ordering& ordering, int i, int j, int k_min = 0);

/// (Pi[d / d_th], Pi[|theta| / theta_th]) with the instantaneous (TwoBitInstant) or mean
/// (TwoBitMean) incidence angle. Boundaries are inclusive.
TwoBitReport two_bit_feedback(const ReceiverState& state, const FeedbackScheme& scheme,
                              double ell);

bool one_bit_feedback(double d, double d_threshold) noexcept;

/// Per-user reports for a group kind. Two-bit users whose feedback angle lies outside the
/// FOV do not report; one-bit users always report, with the distance bit duplicated.
std::vector<GroupReport> collect_group_feedback(const PopulationSnapshot& reported,
                                                const FeedbackScheme& scheme,
                                                const LedGeometry& geom);

/// Mixed reports (0, 1) and (1, 0) are never scheduled.
GroupAssignment group_users(std::span<const GroupReport> reports);

/// One uniformly random member of each nonempty group.
ScheduleDecision select_group_pair(const GroupAssignment& groups, CounterRng& rng);

} // namespace vlcnoma
