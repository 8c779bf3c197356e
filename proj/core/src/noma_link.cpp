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

#include "vlcnoma/noma_link.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vlcnoma/errors.hpp"
#include "vlcnoma/units.hpp"

namespace vlcnoma {

PowerAllocation PowerAllocation::make(double weak, double strong,
                                      PowerInterpretation interpretation)
{
    if (!(weak > 0.0 && strong > 0.0))
        throw DomainError("PowerAllocation: coefficients must be positive");
    if (interpretation == PowerInterpretation::Amplitude) {
        const double total = weak * weak + strong * strong;
        weak = weak * weak / total;
        strong = strong * strong / total;
    }
    if (std::abs(weak + strong - 1.0) > 1e-12)
        throw DomainError("PowerAllocation: power shares must sum to 1");
    if (!(weak < 1.0 && strong < 1.0))
        throw DomainError("PowerAllocation: shares must lie in (0, 1)");
    if (!(weak > strong))
        throw DomainError("PowerAllocation: the weak user must receive the larger share");
    return PowerAllocation{weak, strong};
}

TargetRates TargetRates::make(double rate_weak, double rate_strong)
{
    if (!(rate_weak >= 0.0 && rate_strong >= 0.0))
        throw DomainError("TargetRates: rates must be nonnegative");
    return TargetRates{rate_weak, rate_strong, epsilon_threshold(rate_weak),
                       epsilon_threshold(rate_strong)};
}

double sinr_cross(double h_strong_sq, const PowerAllocation& alloc, double gamma) noexcept
{
    return h_strong_sq * alloc.share_weak / (h_strong_sq * alloc.share_strong + 1.0 / gamma);
}

double sinr_own(double h_sq, const PowerAllocation& alloc, double gamma, bool is_strongest) noexcept
{
    if (is_strongest)
        return h_sq * alloc.share_strong * gamma;
    return sinr_cross(h_sq, alloc, gamma);
}

double rate_from_sinr(double sinr) noexcept
{
    return 0.5 * std::log2(1.0 + kOpticalRateGap * sinr);
}

double epsilon_threshold(double target_rate) noexcept
{
    return std::expm1(2.0 * target_rate * std::numbers::ln2) / kOpticalRateGap;
}

GainThresholds eta_thresholds(const TargetRates& targets, const PowerAllocation& alloc,
                              double gamma)
{
    const double margin = alloc.share_weak - alloc.share_strong * targets.eps_weak;
    if (!(margin > 0.0)) {
        std::ostringstream msg;
        msg << "infeasible power allocation: share_weak - share_strong * eps_weak = " << margin
            << " <= 0 (weak-user target " << targets.rate_weak
            << " bit/s/Hz is unreachable at any gain)";
        throw InfeasibleAllocation(msg.str());
    }
    const double eta_weak = targets.eps_weak / gamma / margin;
    const double eta_strong = std::max(eta_weak, targets.eps_strong / gamma / alloc.share_strong);
    return GainThresholds{eta_weak, eta_strong};
}

GainThresholds oma_thresholds(const TargetRates& targets, double gamma, OmaRateModel model,
                              int num_users)
{
    const double slots = model == OmaRateModel::TimeShared ? static_cast<double>(num_users) : 1.0;
    return GainThresholds{epsilon_threshold(slots * targets.rate_weak) / gamma,
                          epsilon_threshold(slots * targets.rate_strong) / gamma};
}

PairOutage noma_pair_outcome(double h_weak_sq, double h_strong_sq,
                             const GainThresholds& thresholds) noexcept
{
    return PairOutage{!(h_weak_sq > thresholds.eta_weak), !(h_strong_sq > thresholds.eta_strong)};
}

namespace {

double pair_sum_rate(std::span<const double> outage_probs, const TargetRates& targets)
{
    if (outage_probs.size() != 2)
        throw DomainError("sum rate: expected outage probabilities for exactly two users");
    for (double p : outage_probs)
        if (!(p >= 0.0 && p <= 1.0))
            throw DomainError("sum rate: outage probabilities must lie in [0, 1]");
    return (1.0 - outage_probs[0]) * targets.rate_weak + (1.0 - outage_probs[1]) * targets.rate_strong;
}

} // namespace

double noma_sum_rate(std::span<const double> outage_probs, const TargetRates& targets)
{
    return pair_sum_rate(outage_probs, targets);
}

double oma_sum_rate(std::span<const double> outage_probs, const TargetRates& targets)
{
    // Same functional form; the OMA outage probabilities come from oma_thresholds.
    return pair_sum_rate(outage_probs, targets);
}

} // namespace vlcnoma
