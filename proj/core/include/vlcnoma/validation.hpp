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

// Analytic-versus-Monte-Carlo checks. Each check draws its own samples from counter-based
// streams, so a (configuration, seed) pair always produces the same report.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vlcnoma/analytic.hpp"
#include "vlcnoma/experiment.hpp"

namespace vlcnoma {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
};

struct ValidationOptions {
    std::uint64_t samples = 1'000'000;       // CDF checks: conditioned samples per check
    std::uint64_t gain_draws = 10'000'000;   // single-user draws for the nonzero probability
    std::uint64_t populations = 1'000'000;   // population draws for the K_nz law
    std::uint64_t sweep_trials = 1'000'000;  // cross-engine sum-rate comparison
    double tolerance_scale = 1.0;            // multiplies every distance tolerance
    std::uint64_t seed = 7;
    unsigned workers = 0;
    /// Replaces the analytic gain profile (the Monte Carlo side keeps the true channel);
    /// used to confirm that the checks detect a wrong model.
    std::optional<PathGainProfile> profile_override;

    /// Reduced sample counts and doubled tolerances for a fast smoke run.
    static ValidationOptions quick();
};

/// sup_x |F(x) - F_n(x)| over the sample points, comparing both sides of every jump of F_n.
/// F may have an atom at the smallest sample; `probes` empirical quantiles are examined.
double sup_distance(const EmpiricalCdf& empirical, const std::function<double(double)>& cdf,
                    std::size_t probes = 500);

// Samplers of the true squared gain under the model's geometry and mobility.

/// Squared gains of single users, conditioned on a nonzero gain.
std::vector<double> sample_nonzero_gains(const AnalyticModel& model, std::uint64_t count,
                                         std::uint64_t seed);
/// k-th smallest nonzero squared gain of populations with K_nz >= k_min.
std::vector<double> sample_ordered_gains(const AnalyticModel& model, int k, int k_min,
                                         std::uint64_t count, std::uint64_t seed);
/// Squared gains of single users whose two-bit report puts them in `role`'s group.
std::vector<double> sample_group_gains(const AnalyticModel& model, GroupRole role,
                                       std::uint64_t count, std::uint64_t seed);

// Individual checks.

CheckResult check_nonzero_probability(const AnalyticModel& model, const ValidationOptions& opt);
CheckResult check_knz_pmf(const AnalyticModel& model, int k_min, const ValidationOptions& opt);
CheckResult check_unordered_cdf(const AnalyticModel& model, const ValidationOptions& opt);
CheckResult check_ordered_cdf(const AnalyticModel& model, int k, int k_min, const ValidationOptions& opt);
CheckResult check_group_cdf(const AnalyticModel& model, GroupVariant variant, GroupRole role,
                            const ValidationOptions& opt);
/// At delta_phi = 0 the instantaneous and mean angles coincide, so both group variants must
/// give the same CDFs; compared pointwise on a grid spanning both groups' gain ranges.
CheckResult check_group_variant_coincidence(const AnalyticModel& model, std::size_t points = 200);
/// Threshold outcome versus the rate conditions evaluated directly from the SINRs.
CheckResult check_threshold_reduction(const NomaConfig& noma, std::uint64_t tuples, std::uint64_t seed);
/// Monte Carlo versus analytic sum rate, per point within max(CI, 0.05 bit/s/Hz).
CheckResult check_sum_rate_agreement(const ExperimentConfig& config, FeedbackKind kind,
                                     const ValidationOptions& opt);

/// Runs every check that applies to the configuration's schemes.
ValidationReport validate(const ExperimentConfig& config, const ValidationOptions& options = {});

} // namespace vlcnoma
