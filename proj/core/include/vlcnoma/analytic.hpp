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

// Closed-form gain statistics of the nonzero (inside-FOV) squared channel and the outage and
// sum-rate expressions built on them. Every integral is evaluated by adaptive quadrature
// and returned together with its error estimate.
//
// Notation used below:
//   window(y, r) = pi - atan(ell / r) + y, so |theta| <= y  <=>  phi in [window(-y), window(y)]
//   deltaF(r, y) = F_phi(window(y, r)) - F_phi(window(-y, r)) = P(|theta| <= y | d = r)

#include <span>
#include <vector>

#include "vlcnoma/channel_model.hpp"
#include "vlcnoma/curve.hpp"
#include "vlcnoma/noma_link.hpp"
#include "vlcnoma/quadrature.hpp"
#include "vlcnoma/scheduler.hpp"
#include "vlcnoma/user_population.hpp"

namespace vlcnoma {

struct AnalyticModel {
    LedGeometry geom;
    MobilityConfig mobility;
    FeedbackScheme scheme;
    QuadratureConfig quad;
    PathGainProfile profile;

    /// Validates every part; the gain profile is derived from the geometry.
    AnalyticModel(const LedGeometry& geom, const MobilityConfig& mobility,
                  const FeedbackScheme& scheme = {}, const QuadratureConfig& quad = {});
};

enum class GroupVariant { Instant, Mean };
enum class GroupRole { Weak, Strong };

double incidence_window(const AnalyticModel& model, double r, double y) noexcept;

double delta_F_phi(const AnalyticModel& model, double r, double y) noexcept;

/// Angles at which the squared gain equals x at distance r, capped/floored by z:
///   psi = min(a, z), omega = max(a, z), capital_psi = min(a', z)
/// with a = acos(2 min(x upsilon(r), 1) - 1) / 2 and a' the same with the arccos argument
/// clamped to [-1, 1].
struct ClippedAngles {
    double psi;
    double omega;
    double capital_psi;
};
ClippedAngles clipped_angle_helpers(const PathGainProfile& profile, double x, double r, double z) noexcept;

/// Binomial(K, p) restricted to k >= k_min and renormalised, computed in the log domain.
/// Throws DomainError if the conditioning event has zero probability.
double truncated_binomial_pmf(int num_users, double p, int k, int k_min);

/// Distribution of the squared gain of a user with nonzero gain, of the number of such users,
/// and of the ordered nonzero gains (individual scheduling).
class UnorderedGainDistribution {
public:
    explicit UnorderedGainDistribution(const AnalyticModel& model);

    const AnalyticModel& model() const noexcept { return model_; }

    /// p = (1 / delta_d) * integral of deltaF(r, Theta) over [d_min, d_max].
    Estimate nonzero_probability() const noexcept;

    double knz_pmf(int k, int k_min) const;
    /// P(K_nz >= k_min).
    double conditioning_probability(int k_min) const;

    Estimate cdf(double x) const;
    /// CDF of the k-th smallest nonzero squared gain given K_nz >= k_min.
    Estimate ordered_cdf(double x, int k, int k_min) const;

private:
    AnalyticModel model_;
    Estimate in_fov_integral_;
};

/// Group-conditional squared-gain distribution for two-bit feedback built on the
/// instantaneous (Instant) or mean (Mean) incidence angle.
class GroupGainDistribution {
public:
    GroupGainDistribution(const AnalyticModel& model, GroupVariant variant);

    const AnalyticModel& model() const noexcept { return model_; }
    GroupVariant variant() const noexcept { return variant_; }

    /// Probability that a single user reports into the group of `role`.
    Estimate membership_probability(GroupRole role) const noexcept;

    /// P(h^2 <= x | member of `role`'s group). For the Mean variant the weak-group CDF has an
    /// atom at 0: a member may still have its instantaneous angle outside the FOV.
    Estimate cdf(double x, GroupRole role) const;

    /// P(the group of `role` is empty) among K users.
    double empty_probability(GroupRole role) const noexcept;
    /// P(both groups nonempty) among K users.
    double both_nonempty_probability() const noexcept;

private:
    Estimate instant_cdf(double x, GroupRole role) const;
    Estimate mean_cdf(double x, GroupRole role) const;
    Estimate mean_membership_integral(GroupRole role, double from) const;
    Estimate mean_inner(double r, double x, GroupRole role) const;

    AnalyticModel model_;
    GroupVariant variant_;
    Estimate weak_norm_;
    Estimate strong_norm_;
};

struct OutageEstimate {
    Estimate weak;
    Estimate strong;
    double conditioning_rate = 1.0;
};

/// Free-function forms of the distribution members.
Estimate nonzero_prob(const AnalyticModel& model);
double knz_pmf(const AnalyticModel& model, int k, int k_min);
Estimate cdf_unordered(const AnalyticModel& model, double x);
Estimate cdf_ordered(const AnalyticModel& model, double x, int k, int k_min);
Estimate cdf_group_instant(const AnalyticModel& model, double x, GroupRole role);
Estimate cdf_group_mean(const AnalyticModel& model, double x, GroupRole role);

/// P_i = F_(i)(eta_i | K_nz >= j), P_j = F_(j)(eta_j | K_nz >= j).
OutageEstimate outage_individual(const UnorderedGainDistribution& dist, const NomaConfig& noma,
                                 double gamma, int i, int j);
OutageEstimate outage_individual(const AnalyticModel& model, const NomaConfig& noma, double gamma,
                                 int i, int j);

/// Group CDFs at (eta_i, eta_j), combined with the empty-group policy.
OutageEstimate outage_group(const GroupGainDistribution& dist, const NomaConfig& noma,
                            double gamma, EmptyGroupPolicy policy);
OutageEstimate outage_group(const AnalyticModel& model, const NomaConfig& noma, double gamma,
                            GroupVariant variant, EmptyGroupPolicy policy);

/// Same quantities for the OMA baseline (thresholds from oma_thresholds).
OutageEstimate oma_outage_individual(const UnorderedGainDistribution& dist, const NomaConfig& noma,
                                     double gamma, int i, int j);
OutageEstimate oma_outage_group(const GroupGainDistribution& dist, const NomaConfig& noma,
                                double gamma, EmptyGroupPolicy policy);

/// True for the scheme kinds with a closed form: FullCsi (individual) and the two two-bit
/// group kinds.
bool has_analytic_form(FeedbackKind kind) noexcept;

/// NOMA and OMA sum-rate curves over a dB grid for the model's scheme. Points whose
/// quadrature fails are flagged and the sweep continues. Throws DomainError for schemes
/// without a closed form.
std::vector<Curve> analytic_sum_rate_sweep(const AnalyticModel& model, const NomaConfig& noma,
                                           std::span<const double> gamma_grid_db,
                                           const SchedulingStrategy& strategy);

} // namespace vlcnoma
