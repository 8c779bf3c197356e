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

#include "vlcnoma/user_population.hpp"

#include <algorithm>
#include <random>

#include "vlcnoma/errors.hpp"
#include "vlcnoma/units.hpp"

namespace vlcnoma {

MobilityConfig MobilityConfig::symmetric(double d_min, double d_max, double delta_phi,
                                         int num_users)
{
    return MobilityConfig{d_min, d_max, delta_phi, kPi - delta_phi, delta_phi, num_users};
}

void MobilityConfig::validate() const
{
    if (!(d_min >= 0.0 && d_min < d_max))
        throw DomainError("MobilityConfig: require 0 <= d_min < d_max");
    if (!(mean_phi_min <= mean_phi_max))
        throw DomainError("MobilityConfig: require mean_phi_min <= mean_phi_max");
    if (!(delta_phi >= 0.0))
        throw DomainError("MobilityConfig: delta_phi must be nonnegative");
    if (num_users < 2)
        throw DomainError("MobilityConfig: at least two users are required");
    // Small slack so that degree-specified configurations at the edges are accepted.
    constexpr double slack = 1e-12;
    if (mean_phi_min - delta_phi < -slack || mean_phi_max + delta_phi > kPi + slack)
        throw DomainError("MobilityConfig: instantaneous angle must stay inside [0, pi]");
}

ReceiverState sample_user(const MobilityConfig& config, CounterRng& rng) noexcept
{
    ReceiverState s{};
    s.d = rng.uniform(config.d_min, config.d_max);
    s.mean_phi = rng.uniform(config.mean_phi_min, config.mean_phi_max);
    s.phi = s.mean_phi + rng.uniform(-config.delta_phi, config.delta_phi);
    return s;
}

PopulationSnapshot make_snapshot(std::vector<ReceiverState> users, const LedGeometry& geom)
{
    PopulationSnapshot snap;
    snap.true_gains.reserve(users.size());
    snap.mean_gains.reserve(users.size());
    for (const auto& u : users) {
        snap.true_gains.push_back(channel_gain(geom, u));
        snap.mean_gains.push_back(mean_channel_gain(geom, u.d, u.mean_phi));
    }
    snap.users = std::move(users);
    return snap;
}

PopulationSnapshot sample_population(const MobilityConfig& config, const LedGeometry& geom,
                                     const RandomStreams& streams, std::uint64_t trial)
{
    std::vector<ReceiverState> users;
    users.reserve(static_cast<std::size_t>(config.num_users));
    for (int k = 0; k < config.num_users; ++k) {
        auto rng = streams.engine(trial, lanes::user(static_cast<std::uint64_t>(k)));
        users.push_back(sample_user(config, rng));
    }
    return make_snapshot(std::move(users), geom);
}

double conditional_phi_cdf(double mean_phi, double delta_phi, double x) noexcept
{
    if (delta_phi <= 0.0)
        return x >= mean_phi ? 1.0 : 0.0;
    return std::clamp((x - mean_phi + delta_phi) / (2.0 * delta_phi), 0.0, 1.0);
}

double mean_phi_cdf(const MobilityConfig& config, double x) noexcept
{
    const double span = config.mean_phi_span();
    if (span <= 0.0)
        return x >= config.mean_phi_min ? 1.0 : 0.0;
    return std::clamp((x - config.mean_phi_min) / span, 0.0, 1.0);
}

namespace {

// Integral of the mean-angle CDF from -inf to y.
double integrated_mean_cdf(const MobilityConfig& config, double y) noexcept
{
    const double a = config.mean_phi_min;
    const double b = config.mean_phi_max;
    if (y <= a)
        return 0.0;
    if (b <= a)
        return y - a;
    if (y >= b)
        return 0.5 * (b - a) + (y - b);
    return 0.5 * (y - a) * (y - a) / (b - a);
}

} // namespace

double marginal_phi_cdf(const MobilityConfig& config, double x) noexcept
{
    const double w = config.delta_phi;
    if (w <= 0.0)
        return mean_phi_cdf(config, x);
    // P(mean + u <= x) = (1 / 2w) * integral_{-w}^{w} F_mean(x - u) du
    const double value =
        (integrated_mean_cdf(config, x + w) - integrated_mean_cdf(config, x - w)) / (2.0 * w);
    return std::clamp(value, 0.0, 1.0);
}

ReceiverState noisy_estimates(const ReceiverState& state, double sigma_d, double sigma_phi,
                              CounterRng& rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    ReceiverState est = state;
    // Draw all three regardless of sigma so the stream layout is fixed.
    const double e_d = gauss(rng);
    const double e_phi = gauss(rng);
    const double e_mean = gauss(rng);
    est.d = std::max(0.0, state.d + sigma_d * e_d);
    est.phi = state.phi + sigma_phi * e_phi;
    est.mean_phi = state.mean_phi + sigma_phi * e_mean;
    return est;
}

} // namespace vlcnoma
