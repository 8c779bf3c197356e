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

#include "vlcnoma/scheduler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <utility>

#include "vlcnoma/errors.hpp"

namespace vlcnoma {

namespace {

constexpr std::array<std::pair<FeedbackKind, std::string_view>, 6> kKindNames{{
    {FeedbackKind::FullCsi, "full-csi"},
    {FeedbackKind::MeanAngle, "mean-angle"},
    {FeedbackKind::DistanceOnly, "distance-only"},
    {FeedbackKind::TwoBitInstant, "two-bit-instant"},
    {FeedbackKind::TwoBitMean, "two-bit-mean"},
    {FeedbackKind::OneBitDistance, "one-bit-distance"},
}};

// Ascending by key over users with key > 0, ties by index.
Ordering ascending_nonzero(std::span<const double> keys)
{
    Ordering order;
    for (std::size_t k = 0; k < keys.size(); ++k)
        if (keys[k] > 0.0)
            order.push_back(k);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    return order;
}

} // namespace

std::string_view to_string(FeedbackKind kind) noexcept
{
    for (const auto& [k, name] : kKindNames)
        if (k == kind)
            return name;
    return "unknown";
}

std::optional<FeedbackKind> parse_feedback_kind(std::string_view name) noexcept
{
    for (const auto& [k, n] : kKindNames)
        if (n == name)
            return k;
    return std::nullopt;
}

bool is_group_kind(FeedbackKind kind) noexcept
{
    return kind == FeedbackKind::TwoBitInstant || kind == FeedbackKind::TwoBitMean ||
           kind == FeedbackKind::OneBitDistance;
}

void FeedbackScheme::validate(const LedGeometry& geom) const
{
    if (!is_group_kind(kind))
        return;
    if (!(d_threshold > 0.0))
        throw DomainError("FeedbackScheme: distance threshold must be positive");
    if (kind == FeedbackKind::OneBitDistance)
        return;
    if (!(theta_threshold > 0.0 && theta_threshold <= geom.half_fov))
        throw DomainError("FeedbackScheme: angle threshold must lie in (0, half FOV]");
}

Ordering order_full_csi(const PopulationSnapshot& snapshot)
{
    return ascending_nonzero(snapshot.true_gains);
}

Ordering order_mean_gain(const PopulationSnapshot& snapshot)
{
    return ascending_nonzero(snapshot.mean_gains);
}

Ordering order_distance(const PopulationSnapshot& snapshot)
{
    Ordering order(snapshot.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return snapshot.users[a].d > snapshot.users[b].d;
    });
    return order;
}

ScheduleDecision select_individual(const Ordering& ordering, int i, int j, int k_min)
{
    if (!(i >= 1 && i < j))
        throw DomainError("select_individual: ranks must satisfy 1 <= i < j");
    const auto needed = static_cast<std::size_t>(std::max(j, k_min));
    ScheduleDecision decision;
    decision.nonzero_count = ordering.size();
    if (ordering.size() < needed)
        return decision;
    decision.weak = ordering[static_cast<std::size_t>(i - 1)];
    decision.strong = ordering[static_cast<std::size_t>(j - 1)];
    return decision;
}

TwoBitReport two_bit_feedback(const ReceiverState& state, const FeedbackScheme& scheme, double ell)
{
    if (scheme.kind != FeedbackKind::TwoBitInstant && scheme.kind != FeedbackKind::TwoBitMean)
        throw DomainError("two_bit_feedback: scheme must be a two-bit kind");
    const double phi = scheme.kind == FeedbackKind::TwoBitInstant ? state.phi : state.mean_phi;
    const double theta = incidence_angle(state.d, phi, ell);
    return TwoBitReport{state.d <= scheme.d_threshold, std::abs(theta) <= scheme.theta_threshold};
}

bool one_bit_feedback(double d, double d_threshold) noexcept
{
    return d <= d_threshold;
}

std::vector<GroupReport> collect_group_feedback(const PopulationSnapshot& reported,
                                                const FeedbackScheme& scheme,
                                                const LedGeometry& geom)
{
    std::vector<GroupReport> reports;
    reports.reserve(reported.size());
    for (const auto& user : reported.users) {
        if (scheme.kind == FeedbackKind::OneBitDistance) {
            const bool bit = one_bit_feedback(user.d, scheme.d_threshold);
            reports.emplace_back(TwoBitReport{bit, bit});
            continue;
        }
        const double phi = scheme.kind == FeedbackKind::TwoBitInstant ? user.phi : user.mean_phi;
        if (!inside_fov(incidence_angle(user.d, phi, geom.ell), geom.half_fov)) {
            reports.emplace_back(std::nullopt);
            continue;
        }
        reports.emplace_back(two_bit_feedback(user, scheme, geom.ell));
    }
    return reports;
}

GroupAssignment group_users(std::span<const GroupReport> reports)
{
    GroupAssignment groups;
    for (std::size_t k = 0; k < reports.size(); ++k) {
        if (!reports[k])
            continue;
        const auto& r = *reports[k];
        if (!r.distance_bit && !r.angle_bit)
            groups.weak_group.push_back(k);
        else if (r.distance_bit && r.angle_bit)
            groups.strong_group.push_back(k);
    }
    return groups;
}

ScheduleDecision select_group_pair(const GroupAssignment& groups, CounterRng& rng)
{
    auto pick = [&](const std::vector<std::size_t>& group) -> std::optional<std::size_t> {
        // Always consume one draw so the stream layout does not depend on group sizes.
        const double u = rng.uniform01();
        if (group.empty())
            return std::nullopt;
        const auto idx = std::min(group.size() - 1,
                                  static_cast<std::size_t>(u * static_cast<double>(group.size())));
        return group[idx];
    };
    ScheduleDecision decision;
    decision.weak = pick(groups.weak_group);
    decision.strong = pick(groups.strong_group);
    decision.nonzero_count = groups.weak_group.size() + groups.strong_group.size();
    return decision;
}

} // namespace vlcnoma
