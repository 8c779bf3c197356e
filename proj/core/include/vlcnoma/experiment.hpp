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

// Monte Carlo sum-rate sweeps. Every trial draws one user population, schedules a pair with
// each configured feedback scheme and evaluates the pair's outage on the true channel at every
// SNR of the grid. Trials draw from counter-based streams keyed on (seed, trial, lane), so the
// result is the same for any number of worker threads.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vlcnoma/channel_model.hpp"
#include "vlcnoma/curve.hpp"
#include "vlcnoma/noma_link.hpp"
#include "vlcnoma/quadrature.hpp"
#include "vlcnoma/scheduler.hpp"
#include "vlcnoma/user_population.hpp"

namespace vlcnoma {

/// Gaussian errors on the quantities a user feeds back. Scheduling sees the noisy values;
/// outage is always evaluated on the true channel.
struct NoiseConfig {
    double sigma_d = 0.0;   // [m]
    double sigma_phi = 0.0; // [rad], applied to phi and mean_phi independently
};

struct ExperimentConfig {
    std::string label;
    LedGeometry geom;
    MobilityConfig mobility;
    NomaConfig noma;
    /// Ranks and the empty-group policy. Whether a scheme uses individual or group scheduling
    /// follows from its kind.
    SchedulingStrategy strategy;
    std::vector<FeedbackKind> schemes;
    double d_threshold = 0.0;     // group kinds [m]
    double theta_threshold = 0.0; // group kinds [rad]
    /// Adds one OMA curve, served with the pairs chosen by the first scheme.
    bool include_oma = true;
    std::vector<double> gamma_db;
    std::uint64_t trials = 100000;
    std::uint64_t root_seed = 1;
    std::optional<NoiseConfig> noise;
    QuadratureConfig quad;
    unsigned workers = 0; // 0: one per hardware thread

    FeedbackScheme scheme(FeedbackKind kind) const noexcept { return {kind, d_threshold, theta_threshold}; }

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// The pair one scheme chose in one trial, described by its true squared gains.
struct PairSample {
    bool conditioned = false; // the trial counts towards this scheme's statistics
    bool has_weak = false;
    bool has_strong = false;
    double weak_gain_sq = 0.0;
    double strong_gain_sq = 0.0;
};

/// Draws the trial's population (and feedback noise) and schedules every scheme on it.
/// Entry s belongs to config.schemes[s].
std::vector<PairSample> run_trial(const ExperimentConfig& config, std::uint64_t trial);

/// NOMA curve "noma-<kind>" per scheme plus, with include_oma, "oma-<first kind>".
/// Points with no conditioned trial are flagged.
std::vector<Curve> run_sweep(const ExperimentConfig& config);

/// Right-continuous empirical CDF of a sample.
class EmpiricalCdf {
public:
    /// Throws DomainError on an empty sample.
    explicit EmpiricalCdf(std::vector<double> samples);

    std::size_t size() const noexcept { return sorted_.size(); }
    const std::vector<double>& sorted() const noexcept { return sorted_; }

    /// Fraction of samples <= x.
    double operator()(double x) const noexcept;
    /// Fraction of samples < x.
    double left_limit(double x) const noexcept;
    /// Smallest sample s with F(s) >= p, p in (0, 1].
    double quantile(double p) const;

private:
    std::vector<double> sorted_;
};

} // namespace vlcnoma
