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
#include <cstdint>
#include <span>
#include <vector>

#include "vlcnoma/channel_model.hpp"
#include "vlcnoma/random.hpp"

namespace vlcnoma {

/// Two-layer uniform mobility model: d ~ U[d_min, d_max], mean_phi ~ U[mean_phi_min,
/// mean_phi_max], phi | mean_phi ~ U[mean_phi - delta_phi, mean_phi + delta_phi].
struct MobilityConfig {
    double d_min = 0.0;
    double d_max = 10.0;
    double mean_phi_min = 0.0;
    double mean_phi_max = 0.0;
    double delta_phi = 0.0;
    int num_users = 2;

    /// mean_phi in [delta_phi, pi - delta_phi], so phi always spans [0, pi].
    static MobilityConfig symmetric(double d_min, double d_max, double delta_phi, int num_users);

    /// Throws DomainError on a violated invariant.
    void validate() const;

    double distance_span() const noexcept { return d_max - d_min; }
    double mean_phi_span() const noexcept { return mean_phi_max - mean_phi_min; }
};

struct PopulationSnapshot {
    std::vector<ReceiverState> users;
    std::vector<double> true_gains;
    std::vector<double> mean_gains;

    std::size_t size() const noexcept { return users.size(); }
};

/// Draws one user from `rng` (always exactly three uniforms).
ReceiverState sample_user(const MobilityConfig& config, CounterRng& rng) noexcept;

/// Evaluates both gain lists for the given receiver states.
PopulationSnapshot make_snapshot(std::vector<ReceiverState> users, const LedGeometry& geom);

/// K independent users; user k of trial t draws from streams.engine(t, lanes::user(k)).
PopulationSnapshot sample_population(const MobilityConfig& config, const LedGeometry& geom,
                                     const RandomStreams& streams, std::uint64_t trial);

/// CDF of U[mean_phi - delta_phi, mean_phi + delta_phi] at x; a unit step at mean_phi when
/// delta_phi == 0.
double conditional_phi_cdf(double mean_phi, double delta_phi, double x) noexcept;

/// CDF of phi after marginalising the mean angle: the trapezoidal law of the sum of the two
/// uniform layers.
double marginal_phi_cdf(const MobilityConfig& config, double x) noexcept;

/// CDF of the mean angle alone, U[mean_phi_min, mean_phi_max] (a step if degenerate).
double mean_phi_cdf(const MobilityConfig& config, double x) noexcept;

/// Feedback-side estimate: independent N(0, sigma) errors on d (clamped at 0), phi and
/// mean_phi. Never used to evaluate the true channel.
ReceiverState noisy_estimates(const ReceiverState& state, double sigma_d, double sigma_phi,
                              CounterRng& rng);

} // namespace vlcnoma
