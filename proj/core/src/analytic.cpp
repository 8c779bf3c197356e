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

#include "vlcnoma/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>

#include <gsl/gsl_cdf.h>
#include <gsl/gsl_randist.h>
#include <gsl/gsl_sf_gamma.h>

#include "vlcnoma/errors.hpp"
#include "vlcnoma/units.hpp"

namespace vlcnoma {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double clamp01(double v) noexcept { return std::clamp(v, 0.0, 1.0); }

// num / den with first-order error propagation.
Estimate ratio(const Estimate& num, const Estimate& den) noexcept
{
    const double v = num.value / den.value;
    return {v, num.abs_error / den.value + std::abs(v) * den.abs_error / den.value};
}

Estimate one_minus(Estimate e) noexcept { return {1.0 - e.value, e.abs_error}; }

Estimate clamped(Estimate e) noexcept { return {clamp01(e.value), e.abs_error}; }

// Angle at which the squared gain equals x at distance r: acos(sqrt(s)), s = min(x upsilon, 1),
// which equals acos(2 s - 1) / 2 without the cancellation near s = 1.
double angle_at_squared_gain(const PathGainProfile& profile, double x, double r) noexcept
{
    const double s = std::clamp(x * profile.upsilon(r), 0.0, 1.0);
    return std::acos(std::sqrt(s));
}

// Distances in (d_min, d_max) where window(offset, r) equals one of `targets`.
std::vector<double> window_crossings(const AnalyticModel& m, std::initializer_list<double> offsets,
                                     std::span<const double> targets)
{
    std::vector<double> out;
    for (double off : offsets) {
        for (double c : targets) {
            const double t = kPi + off - c; // atan(ell / r) at the crossing
            if (t > 0.0 && t <= kPi / 2.0) {
                const double r = m.geom.ell / std::tan(t);
                if (r > m.mobility.d_min && r < m.mobility.d_max)
                    out.push_back(r);
            }
        }
    }
    return out;
}

// Distances in (lo, hi) where window(+-angle(r), r) equals one of `targets`. The window edge
// moves with r, so the crossings are bracketed on a uniform scan and refined by bisection.
template <class AngleFn>
std::vector<double> moving_window_crossings(const AnalyticModel& m, double lo, double hi, AngleFn&& angle,
                                            std::span<const double> targets)
{
    std::vector<double> out;
    if (!(hi > lo))
        return out;
    constexpr int kScan = 96;
    for (double sign : {1.0, -1.0}) {
        for (double c : targets) {
            auto f = [&](double r) { return incidence_window(m, r, sign * angle(r)) - c; };
            double a = lo;
            double fa = f(a);
            for (int k = 1; k <= kScan; ++k) {
                const double b = lo + (hi - lo) * k / kScan;
                const double fb = f(b);
                if ((fa < 0.0) != (fb < 0.0)) {
                    double u = a;
                    double v = b;
                    double fu = fa;
                    for (int it = 0; it < 60 && v - u > 1e-13 * (1.0 + v); ++it) {
                        const double mid = 0.5 * (u + v);
                        const double fm = f(mid);
                        if ((fu < 0.0) == (fm < 0.0)) {
                            u = mid;
                            fu = fm;
                        } else {
                            v = mid;
                        }
                    }
                    out.push_back(0.5 * (u + v));
                }
                a = b;
                fa = fb;
            }
        }
    }
    return out;
}

std::array<double, 4> marginal_kinks(const MobilityConfig& mc) noexcept
{
    return {mc.mean_phi_min - mc.delta_phi, mc.mean_phi_min + mc.delta_phi,
            mc.mean_phi_max - mc.delta_phi, mc.mean_phi_max + mc.delta_phi};
}

std::array<double, 2> mean_kinks(const MobilityConfig& mc) noexcept
{
    return {mc.mean_phi_min, mc.mean_phi_max};
}

void append(std::vector<double>& to, const std::vector<double>& from)
{
    to.insert(to.end(), from.begin(), from.end());
}

// P(Binomial(n, q) >= k).
double binomial_upper_tail(int n, double q, int k)
{
    if (k <= 0)
        return 1.0;
    if (k > n || q <= 0.0)
        return 0.0;
    if (q >= 1.0)
        return 1.0;
    return gsl_cdf_binomial_Q(static_cast<unsigned>(k - 1), q, static_cast<unsigned>(n));
}

double log_binomial_term(int n, int k, double p)
{
    const double lp = k == 0 ? 0.0 : (p > 0.0 ? k * std::log(p) : -INFINITY);
    const double lq = n - k == 0 ? 0.0 : (p < 1.0 ? (n - k) * std::log1p(-p) : -INFINITY);
    return gsl_sf_lnchoose(static_cast<unsigned>(n), static_cast<unsigned>(k)) + lp + lq;
}

// Whole truncated PMF over k = 0..n.
std::vector<double> truncated_binomial(int n, double p, int k_min)
{
    if (n < 0)
        throw DomainError("truncated_binomial_pmf: negative user count");
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("truncated_binomial_pmf: p must lie in [0, 1]");
    const int lo = std::max(k_min, 0);
    std::vector<double> pmf(static_cast<std::size_t>(n) + 1, 0.0);
    if (lo > n)
        throw DomainError("truncated_binomial_pmf: k_min exceeds the number of users");
    std::vector<double> logs;
    double peak = -INFINITY;
    for (int k = lo; k <= n; ++k) {
        logs.push_back(log_binomial_term(n, k, p));
        peak = std::max(peak, logs.back());
    }
    if (!std::isfinite(peak))
        throw DomainError("truncated_binomial_pmf: conditioning event K_nz >= " +
                          std::to_string(k_min) + " has zero probability");
    double tail = 0.0;
    for (double l : logs)
        tail += std::exp(l - peak);
    const double log_tail = peak + std::log(tail);
    for (int k = lo; k <= n; ++k)
        pmf[static_cast<std::size_t>(k)] = std::exp(logs[static_cast<std::size_t>(k - lo)] - log_tail);
    return pmf;
}

} // namespace

AnalyticModel::AnalyticModel(const LedGeometry& geom_, const MobilityConfig& mobility_,
                             const FeedbackScheme& scheme_, const QuadratureConfig& quad_)
    : geom(geom_), mobility(mobility_), scheme(scheme_), quad(quad_), profile(geom_)
{
    mobility.validate();
    scheme.validate(geom);
    quad.validate();
}

double incidence_window(const AnalyticModel& model, double r, double y) noexcept
{
    return kPi - std::atan2(model.geom.ell, r) + y;
}

double delta_F_phi(const AnalyticModel& model, double r, double y) noexcept
{
    const double hi = marginal_phi_cdf(model.mobility, incidence_window(model, r, y));
    const double lo = marginal_phi_cdf(model.mobility, incidence_window(model, r, -y));
    return std::max(0.0, hi - lo);
}

ClippedAngles clipped_angle_helpers(const PathGainProfile& profile, double x, double r, double z) noexcept
{
    // With x >= 0 the clamped and the min(., 1) forms coincide.
    const double a = angle_at_squared_gain(profile, x, r);
    return {std::min(a, z), std::max(a, z), std::min(a, z)};
}

double truncated_binomial_pmf(int num_users, double p, int k, int k_min)
{
    const auto pmf = truncated_binomial(num_users, p, k_min);
    if (k < 0 || k > num_users)
        return 0.0;
    return pmf[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------------------------
// Individual scheduling

UnorderedGainDistribution::UnorderedGainDistribution(const AnalyticModel& model) : model_(model)
{
    const double fov = model_.geom.half_fov;
    const auto kinks = marginal_kinks(model_.mobility);
    const auto breaks = window_crossings(model_, {fov, -fov}, kinks);
    in_fov_integral_ = integrate([&](double r) { return delta_F_phi(model_, r, fov); },
                                 model_.mobility.d_min, model_.mobility.d_max, breaks, model_.quad);
}

Estimate UnorderedGainDistribution::nonzero_probability() const noexcept
{
    const double span = model_.mobility.distance_span();
    return {in_fov_integral_.value / span, in_fov_integral_.abs_error / span};
}

double UnorderedGainDistribution::knz_pmf(int k, int k_min) const
{
    return truncated_binomial_pmf(model_.mobility.num_users, nonzero_probability().value, k, k_min);
}

double UnorderedGainDistribution::conditioning_probability(int k_min) const
{
    return binomial_upper_tail(model_.mobility.num_users, nonzero_probability().value, k_min);
}

Estimate UnorderedGainDistribution::cdf(double x) const
{
    if (!(x > 0.0))
        return {0.0, 0.0};
    const auto& mob = model_.mobility;
    const double fov = model_.geom.half_fov;
    // Beyond `upper` even theta = 0 gives h^2 <= x, so the integrand vanishes there.
    const double upper = std::min(mob.d_max, model_.profile.distance_at_squared_gain(x));
    std::vector<double> breaks{model_.profile.distance_at_squared_gain(x, std::pow(std::cos(fov), 2))};
    const auto kinks = marginal_kinks(mob);
    append(breaks, window_crossings(model_, {fov, -fov}, kinks));
    append(breaks, moving_window_crossings(
                       model_, mob.d_min, upper,
                       [&](double r) { return clipped_angle_helpers(model_.profile, x, r, fov).psi; }, kinks));
    const Estimate above = integrate(
        [&](double r) {
            return delta_F_phi(model_, r, clipped_angle_helpers(model_.profile, x, r, fov).psi);
        },
        mob.d_min, upper, breaks, model_.quad);
    return clamped(one_minus(ratio(above, in_fov_integral_)));
}

Estimate UnorderedGainDistribution::ordered_cdf(double x, int k, int k_min) const
{
    const int num_users = model_.mobility.num_users;
    if (k < 1 || k > num_users)
        throw DomainError("cdf_ordered: rank must lie in [1, K]");
    const Estimate f = cdf(x);
    const auto pmf = truncated_binomial(num_users, nonzero_probability().value, k_min);
    double value = 0.0;
    double slope = 0.0;
    for (int n = std::max({k_min, k, 0}); n <= num_users; ++n) {
        const double w = pmf[static_cast<std::size_t>(n)];
        if (w == 0.0)
            continue;
        value += w * binomial_upper_tail(n, f.value, k);
        // d/dF P(Bin(n, F) >= k) = n * P(Bin(n - 1, F) = k - 1)
        slope += w * n *
                 gsl_ran_binomial_pdf(static_cast<unsigned>(k - 1), clamp01(f.value),
                                      static_cast<unsigned>(n - 1));
    }
    return {clamp01(value), slope * f.abs_error};
}

// ---------------------------------------------------------------------------------------------
// Group scheduling

GroupGainDistribution::GroupGainDistribution(const AnalyticModel& model, GroupVariant variant)
    : model_(model), variant_(variant)
{
    const auto& s = model_.scheme;
    const auto& mob = model_.mobility;
    if (!(s.kind == FeedbackKind::TwoBitInstant || s.kind == FeedbackKind::TwoBitMean))
        throw DomainError("group CDF: scheme must be a two-bit kind with thresholds set");
    if (!(s.d_threshold > mob.d_min))
        throw DomainError("group CDF: distance threshold must exceed d_min");

    const double fov = model_.geom.half_fov;
    const double th = s.theta_threshold;
    const double d_th = std::min(s.d_threshold, mob.d_max);
    if (variant_ == GroupVariant::Instant) {
        const auto kinks = marginal_kinks(mob);
        weak_norm_ = integrate(
            [&](double r) { return delta_F_phi(model_, r, fov) - delta_F_phi(model_, r, th); }, d_th,
            mob.d_max, window_crossings(model_, {fov, -fov, th, -th}, kinks), model_.quad);
        strong_norm_ = integrate([&](double r) { return delta_F_phi(model_, r, th); }, mob.d_min, d_th,
                                 window_crossings(model_, {th, -th}, kinks), model_.quad);
    } else {
        weak_norm_ = mean_membership_integral(GroupRole::Weak, d_th);
        strong_norm_ = mean_membership_integral(GroupRole::Strong, mob.d_min);
    }
}

Estimate GroupGainDistribution::membership_probability(GroupRole role) const noexcept
{
    const double span = model_.mobility.distance_span();
    const Estimate& norm = role == GroupRole::Weak ? weak_norm_ : strong_norm_;
    return {std::max(0.0, norm.value) / span, norm.abs_error / span};
}

double GroupGainDistribution::empty_probability(GroupRole role) const noexcept
{
    return std::pow(1.0 - membership_probability(role).value, model_.mobility.num_users);
}

double GroupGainDistribution::both_nonempty_probability() const noexcept
{
    const double qw = membership_probability(GroupRole::Weak).value;
    const double qs = membership_probability(GroupRole::Strong).value;
    const int n = model_.mobility.num_users;
    return clamp01(1.0 - std::pow(1.0 - qw, n) - std::pow(1.0 - qs, n) +
                   std::pow(std::max(0.0, 1.0 - qw - qs), n));
}

Estimate GroupGainDistribution::cdf(double x, GroupRole role) const
{
    const Estimate& norm = role == GroupRole::Weak ? weak_norm_ : strong_norm_;
    if (!(norm.value > 0.0))
        throw DomainError(std::string("group CDF: the ") + (role == GroupRole::Weak ? "weak" : "strong") +
                          " group has zero membership probability");
    return variant_ == GroupVariant::Instant ? instant_cdf(x, role) : mean_cdf(x, role);
}

Estimate GroupGainDistribution::instant_cdf(double x, GroupRole role) const
{
    if (!(x > 0.0))
        return {0.0, 0.0};
    const auto& mob = model_.mobility;
    const auto& prof = model_.profile;
    const double fov = model_.geom.half_fov;
    const double th = model_.scheme.theta_threshold;
    const double d_th = std::min(model_.scheme.d_threshold, mob.d_max);
    const auto kinks = marginal_kinks(mob);
    std::vector<double> breaks{prof.distance_at_squared_gain(x, std::pow(std::cos(th), 2))};

    if (role == GroupRole::Weak) {
        // Members have th < |theta| <= Theta; for r below `lower` every such angle gives h^2 > x.
        const double lower =
            std::clamp(prof.distance_at_squared_gain(x, std::pow(std::cos(fov), 2)), d_th, mob.d_max);
        append(breaks, window_crossings(model_, {fov, -fov, th, -th}, kinks));
        append(breaks, moving_window_crossings(
                           model_, lower, mob.d_max,
                           [&](double r) { return clipped_angle_helpers(prof, x, r, th).omega; }, kinks));
        const Estimate below = integrate(
            [&](double r) {
                const double omega = clipped_angle_helpers(prof, x, r, th).omega;
                return std::max(0.0, delta_F_phi(model_, r, fov) - delta_F_phi(model_, r, omega));
            },
            lower, mob.d_max, breaks, model_.quad);
        return clamped(ratio(below, weak_norm_));
    }

    const double upper = std::min(d_th, prof.distance_at_squared_gain(x));
    append(breaks, window_crossings(model_, {th, -th}, kinks));
    append(breaks, moving_window_crossings(
                       model_, mob.d_min, upper,
                       [&](double r) { return clipped_angle_helpers(prof, x, r, th).psi; }, kinks));
    const Estimate above = integrate(
        [&](double r) { return delta_F_phi(model_, r, clipped_angle_helpers(prof, x, r, th).psi); },
        mob.d_min, upper, breaks, model_.quad);
    return clamped(one_minus(ratio(above, strong_norm_)));
}

namespace {

// Mean-angle windows (offset pairs) whose union is a group's membership set at fixed r.
struct OffsetWindow {
    double lo;
    double hi;
};

std::vector<OffsetWindow> mean_windows(GroupRole role, double fov, double th)
{
    if (role == GroupRole::Weak)
        return {{-fov, -th}, {th, fov}};
    return {{-th, th}};
}

} // namespace

Estimate GroupGainDistribution::mean_membership_integral(GroupRole role, double from) const
{
    const auto& mob = model_.mobility;
    const double fov = model_.geom.half_fov;
    const double th = model_.scheme.theta_threshold;
    const double to = role == GroupRole::Weak ? mob.d_max : std::min(model_.scheme.d_threshold, mob.d_max);
    const auto windows = mean_windows(role, fov, th);
    auto measure = [&](double r) {
        double total = 0.0;
        for (const auto& w : windows)
            total += std::max(0.0, mean_phi_cdf(mob, incidence_window(model_, r, w.hi)) -
                                       mean_phi_cdf(mob, incidence_window(model_, r, w.lo)));
        return total;
    };
    return integrate(measure, from, to, window_crossings(model_, {fov, -fov, th, -th}, mean_kinks(mob)),
                     model_.quad);
}

// (1 / span) * integral over the member mean angles at distance r of P(h^2 <= x | r, mean_phi).
Estimate GroupGainDistribution::mean_inner(double r, double x, GroupRole role) const
{
    const auto& mob = model_.mobility;
    const double fov = model_.geom.half_fov;
    const double th = model_.scheme.theta_threshold;
    const double accept = clipped_angle_helpers(model_.profile, x, r, fov).capital_psi;
    const double phi_lo = incidence_window(model_, r, -accept);
    const double phi_hi = incidence_window(model_, r, accept);
    const double dev = mob.delta_phi;
    auto below = [&](double mean_phi) {
        return 1.0 - (conditional_phi_cdf(mean_phi, dev, phi_hi) - conditional_phi_cdf(mean_phi, dev, phi_lo));
    };

    const double span = mob.mean_phi_span();
    Estimate total;
    for (const auto& w : mean_windows(role, fov, th)) {
        const double lo = std::max(mob.mean_phi_min, incidence_window(model_, r, w.lo));
        const double hi = std::min(mob.mean_phi_max, incidence_window(model_, r, w.hi));
        if (span <= 0.0) {
            if (mob.mean_phi_min >= lo && mob.mean_phi_min <= hi)
                total.value += below(mob.mean_phi_min);
            continue;
        }
        if (!(hi > lo))
            continue;
        const std::array<double, 4> breaks{phi_lo - dev, phi_lo + dev, phi_hi - dev, phi_hi + dev};
        QuadratureConfig inner = model_.quad;
        inner.abs_tol *= 0.01;
        const Estimate part = integrate(below, lo, hi, breaks, inner);
        total.value += part.value / span;
        total.abs_error += part.abs_error / span;
    }
    return total;
}

Estimate GroupGainDistribution::mean_cdf(double x, GroupRole role) const
{
    if (x < 0.0)
        return {0.0, 0.0};
    const auto& mob = model_.mobility;
    const double fov = model_.geom.half_fov;
    const double th = model_.scheme.theta_threshold;
    const double d_th = std::min(model_.scheme.d_threshold, mob.d_max);
    const double lo = role == GroupRole::Weak ? d_th : mob.d_min;
    const double hi = role == GroupRole::Weak ? mob.d_max : d_th;
    // From `upper` on, even theta = 0 gives h^2 <= x: those members count in full.
    const double upper = std::clamp(model_.profile.distance_at_squared_gain(x), lo, hi);

    const Estimate certain = upper < hi ? mean_membership_integral(role, upper) : Estimate{};
    // The inner probability switches on where g(r)^2 cos^2(y) = x for the angle bounds y; without
    // these breakpoints a thin support next to `upper` can be missed entirely.
    std::vector<double> breaks{model_.profile.distance_at_squared_gain(x, std::pow(std::cos(th), 2)),
                               model_.profile.distance_at_squared_gain(x, std::pow(std::cos(fov), 2))};
    append(breaks, window_crossings(model_, {fov, -fov, th, -th}, mean_kinks(mob)));
    // The inner breakpoints (acceptance window +- delta_phi) cross the member window edges where
    // the acceptance angle (never below the FOV) equals |edge +- delta_phi|, and cross the mean range along moving edges.
    for (double edge : {fov, th})
        for (double shift : {mob.delta_phi, -mob.delta_phi})
            if (const double a = std::abs(edge + shift); a > fov && a < kPi / 2.0)
                breaks.push_back(model_.profile.distance_at_squared_gain(x, std::pow(std::cos(a), 2)));
    append(breaks, moving_window_crossings(
                       model_, lo, upper,
                       [&](double r) { return clipped_angle_helpers(model_.profile, x, r, fov).capital_psi; },
                       marginal_kinks(mob)));
    // The outer rule sees only the inner values; the inner errors are bounded by their maximum
    // over the evaluated distances times the interval length.
    double inner_error = 0.0;
    auto inner = [&](double r) {
        const Estimate e = mean_inner(r, x, role);
        inner_error = std::max(inner_error, e.abs_error);
        return e.value;
    };
    // The inner probability behaves like sqrt(upper - r) just below `upper`; on the last segment
    // r = upper - t^2 turns that into a smooth integrand.
    double tail_from = lo;
    for (double b : breaks)
        if (b > tail_from && b < upper)
            tail_from = b;
    Estimate partial = integrate(inner, lo, tail_from, breaks, model_.quad);
    const Estimate tail = integrate([&](double t) { return 2.0 * t * inner(upper - t * t); }, 0.0,
                                    std::sqrt(std::max(0.0, upper - tail_from)), {}, model_.quad);
    partial.value += tail.value;
    partial.abs_error += tail.abs_error + inner_error * std::max(0.0, upper - lo);
    const Estimate& norm = role == GroupRole::Weak ? weak_norm_ : strong_norm_;
    return clamped(ratio({certain.value + partial.value, certain.abs_error + partial.abs_error}, norm));
}

// ---------------------------------------------------------------------------------------------
// Free functions and outage

Estimate nonzero_prob(const AnalyticModel& model)
{
    return UnorderedGainDistribution(model).nonzero_probability();
}

double knz_pmf(const AnalyticModel& model, int k, int k_min)
{
    return UnorderedGainDistribution(model).knz_pmf(k, k_min);
}

Estimate cdf_unordered(const AnalyticModel& model, double x)
{
    return UnorderedGainDistribution(model).cdf(x);
}

Estimate cdf_ordered(const AnalyticModel& model, double x, int k, int k_min)
{
    return UnorderedGainDistribution(model).ordered_cdf(x, k, k_min);
}

Estimate cdf_group_instant(const AnalyticModel& model, double x, GroupRole role)
{
    if (model.scheme.kind != FeedbackKind::TwoBitInstant)
        throw DomainError("cdf_group_instant: scheme must be two-bit-instant");
    return GroupGainDistribution(model, GroupVariant::Instant).cdf(x, role);
}

Estimate cdf_group_mean(const AnalyticModel& model, double x, GroupRole role)
{
    if (model.scheme.kind != FeedbackKind::TwoBitMean)
        throw DomainError("cdf_group_mean: scheme must be two-bit-mean");
    return GroupGainDistribution(model, GroupVariant::Mean).cdf(x, role);
}

namespace {

OutageEstimate individual_at(const UnorderedGainDistribution& dist, const GainThresholds& t, int i, int j)
{
    OutageEstimate out;
    out.weak = dist.ordered_cdf(t.eta_weak, i, j);
    out.strong = dist.ordered_cdf(t.eta_strong, j, j);
    out.conditioning_rate = dist.conditioning_probability(j);
    return out;
}

OutageEstimate group_at(const GroupGainDistribution& dist, const GainThresholds& t, EmptyGroupPolicy policy)
{
    auto role_outage = [&](GroupRole role, double eta) -> Estimate {
        if (!(dist.membership_probability(role).value > 0.0))
            return {1.0, 0.0};
        const Estimate f = dist.cdf(eta, role);
        if (policy == EmptyGroupPolicy::Condition)
            return f;
        const double empty = dist.empty_probability(role);
        return {empty + (1.0 - empty) * f.value, (1.0 - empty) * f.abs_error};
    };
    OutageEstimate out;
    out.weak = role_outage(GroupRole::Weak, t.eta_weak);
    out.strong = role_outage(GroupRole::Strong, t.eta_strong);
    out.conditioning_rate = policy == EmptyGroupPolicy::Condition ? dist.both_nonempty_probability() : 1.0;
    return out;
}

} // namespace

OutageEstimate outage_individual(const UnorderedGainDistribution& dist, const NomaConfig& noma,
                                 double gamma, int i, int j)
{
    return individual_at(dist, eta_thresholds(noma.targets, noma.alloc, gamma), i, j);
}

OutageEstimate outage_individual(const AnalyticModel& model, const NomaConfig& noma, double gamma,
                                 int i, int j)
{
    return outage_individual(UnorderedGainDistribution(model), noma, gamma, i, j);
}

OutageEstimate outage_group(const GroupGainDistribution& dist, const NomaConfig& noma, double gamma,
                            EmptyGroupPolicy policy)
{
    return group_at(dist, eta_thresholds(noma.targets, noma.alloc, gamma), policy);
}

OutageEstimate outage_group(const AnalyticModel& model, const NomaConfig& noma, double gamma,
                            GroupVariant variant, EmptyGroupPolicy policy)
{
    return outage_group(GroupGainDistribution(model, variant), noma, gamma, policy);
}

OutageEstimate oma_outage_individual(const UnorderedGainDistribution& dist, const NomaConfig& noma,
                                     double gamma, int i, int j)
{
    return individual_at(dist, oma_thresholds(noma.targets, gamma, noma.oma_model), i, j);
}

OutageEstimate oma_outage_group(const GroupGainDistribution& dist, const NomaConfig& noma,
                                double gamma, EmptyGroupPolicy policy)
{
    return group_at(dist, oma_thresholds(noma.targets, gamma, noma.oma_model), policy);
}

bool has_analytic_form(FeedbackKind kind) noexcept
{
    return kind == FeedbackKind::FullCsi || kind == FeedbackKind::TwoBitInstant ||
           kind == FeedbackKind::TwoBitMean;
}

namespace {

CurvePoint to_point(double gamma_db, const OutageEstimate& o, const TargetRates& targets)
{
    CurvePoint p;
    p.gamma_db = gamma_db;
    p.outage_weak = clamp01(o.weak.value);
    p.outage_strong = clamp01(o.strong.value);
    const std::array<double, 2> probs{p.outage_weak, p.outage_strong};
    p.sum_rate = noma_sum_rate(probs, targets);
    p.ci_halfwidth = o.weak.abs_error * targets.rate_weak + o.strong.abs_error * targets.rate_strong;
    p.conditioning_rate = o.conditioning_rate;
    return p;
}

CurvePoint flagged_point(double gamma_db)
{
    CurvePoint p;
    p.gamma_db = gamma_db;
    p.sum_rate = p.ci_halfwidth = p.outage_weak = p.outage_strong = p.conditioning_rate = kNaN;
    p.flagged = true;
    return p;
}

} // namespace

std::vector<Curve> analytic_sum_rate_sweep(const AnalyticModel& model, const NomaConfig& noma,
                                           std::span<const double> gamma_grid_db,
                                           const SchedulingStrategy& strategy)
{
    const FeedbackKind kind = model.scheme.kind;
    if (!has_analytic_form(kind))
        throw DomainError("no closed-form outage expression for scheme " + std::string(to_string(kind)));
    const bool individual = kind == FeedbackKind::FullCsi;
    if (individual != (strategy.kind == SchedulingStrategy::Kind::Individual))
        throw DomainError("scheme " + std::string(to_string(kind)) + " does not match the scheduling strategy");

    Curve noma_curve{"noma-" + std::string(to_string(kind)), {}};
    Curve oma_curve{"oma-" + std::string(to_string(kind)), {}};

    std::optional<UnorderedGainDistribution> unordered;
    std::optional<GroupGainDistribution> grouped;
    if (individual)
        unordered.emplace(model);
    else
        grouped.emplace(model, kind == FeedbackKind::TwoBitInstant ? GroupVariant::Instant : GroupVariant::Mean);

    for (double db : gamma_grid_db) {
        const double gamma = db_to_linear(db);
        // Infeasible allocations propagate; only numerical failures are flagged per point.
        try {
            const OutageEstimate n = individual
                                         ? outage_individual(*unordered, noma, gamma, strategy.rank_weak, strategy.rank_strong)
                                         : outage_group(*grouped, noma, gamma, strategy.empty_group);
            noma_curve.points.push_back(to_point(db, n, noma.targets));
        } catch (const QuadratureError&) {
            noma_curve.points.push_back(flagged_point(db));
        }
        try {
            const OutageEstimate o = individual
                                         ? oma_outage_individual(*unordered, noma, gamma, strategy.rank_weak, strategy.rank_strong)
                                         : oma_outage_group(*grouped, noma, gamma, strategy.empty_group);
            oma_curve.points.push_back(to_point(db, o, noma.targets));
        } catch (const QuadratureError&) {
            oma_curve.points.push_back(flagged_point(db));
        }
    }
    return {std::move(noma_curve), std::move(oma_curve)};
}

} // namespace vlcnoma
