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

#include <span>

namespace vlcnoma {

/// How configured allocation coefficients are read.
enum class PowerInterpretation {
    Power,     // values are power shares beta^2
    Amplitude, // values are amplitudes beta; squares are renormalised to sum to 1
};

/// Two-user power split. share_* are beta^2 values: they sum to one and the weak user
/// receives the larger share.
struct PowerAllocation {
    double share_weak;
    double share_strong;

    /// Throws DomainError when the invariants do not hold.
    static PowerAllocation make(double weak, double strong,
                                PowerInterpretation interpretation = PowerInterpretation::Power);
};

struct TargetRates {
    double rate_weak;   // bit/s/Hz
    double rate_strong; // bit/s/Hz
    double eps_weak;
    double eps_strong;

    /// Computes the SINR thresholds from the rates.
    static TargetRates make(double rate_weak, double rate_strong);
};

/// Squared-gain thresholds at one transmit SNR.
struct GainThresholds {
    double eta_weak;
    double eta_strong;
};

enum class OmaRateModel {
    TimeShared, // each of L users owns 1/L of the time and must reach L * R_k in its slot
    Literal,    // full-time single-user rate against R_k
};

struct NomaConfig {
    PowerAllocation alloc;
    TargetRates targets;
    OmaRateModel oma_model = OmaRateModel::TimeShared;
};

/// SINR at the strong user while decoding the weak user's message (two-user case).
double sinr_cross(double h_strong_sq, const PowerAllocation& alloc, double gamma) noexcept;

/// SINR of a user decoding its own message. The strongest user sees no intra-pair
/// interference after SIC.
double sinr_own(double h_sq, const PowerAllocation& alloc, double gamma, bool is_strongest) noexcept;

/// 0.5 * log2(1 + (e / 2 pi) * sinr).
double rate_from_sinr(double sinr) noexcept;

/// (2^(2 R) - 1) * 2 pi / e, the SINR needed for rate R.
double epsilon_threshold(double target_rate) noexcept;

/// eta_weak = (eps_w / gamma) / (share_w - share_s eps_w), eta_strong = max(eta_weak,
/// (eps_s / gamma) / share_s). Throws InfeasibleAllocation when share_w <= share_s eps_w.
GainThresholds eta_thresholds(const TargetRates& targets, const PowerAllocation& alloc,
                              double gamma);

/// Squared-gain thresholds of the OMA baseline with `num_users` time slots.
GainThresholds oma_thresholds(const TargetRates& targets, double gamma, OmaRateModel model,
                              int num_users = 2);

struct PairOutage {
    bool weak;
    bool strong;
};

/// Outage iff h^2 <= eta; SIC success is folded into eta_strong.
PairOutage noma_pair_outcome(double h_weak_sq, double h_strong_sq,
                             const GainThresholds& thresholds) noexcept;

/// Sum over the scheduled pair of (1 - P_k) * R_k. outage_probs = {weak, strong}.
double noma_sum_rate(std::span<const double> outage_probs, const TargetRates& targets);
double oma_sum_rate(std::span<const double> outage_probs, const TargetRates& targets);

} // namespace vlcnoma
