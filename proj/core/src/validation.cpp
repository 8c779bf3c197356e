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

#include "vlcnoma/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "vlcnoma/errors.hpp"
#include "vlcnoma/random.hpp"
#include "vlcnoma/units.hpp"

namespace vlcnoma {

namespace {

constexpr double kCdfTolerance = 0.01;
constexpr double kGroupCdfTolerance = 0.015;
constexpr double kCoincidenceTolerance = 1e-6;
constexpr double kSigmas = 3.0;
constexpr double kSumRateFloor = 0.05;

std::string format(const char* fmt, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, a, b, c);
    return buf;
}

CheckResult make_result(std::string name, double measured, double tolerance, std::string detail = {})
{
    return CheckResult{std::move(name), measured, tolerance, measured <= tolerance, std::move(detail)};
}

const char* role_name(GroupRole role) { return role == GroupRole::Weak ? "weak" : "strong"; }

const char* variant_name(GroupVariant v) { return v == GroupVariant::Instant ? "instant" : "mean"; }

double squared(double h) { return h * h; }

// The model the closed forms are evaluated on; samplers always use the true geometry.
AnalyticModel analytic_side(const AnalyticModel& model, const ValidationOptions& opt)
{
    AnalyticModel m = model;
    if (opt.profile_override)
        m.profile = *opt.profile_override;
    return m;
}

AnalyticModel with_kind(const AnalyticModel& model, FeedbackKind kind)
{
    AnalyticModel m = model;
    m.scheme.kind = kind;
    return m;
}

} // namespace

bool ValidationReport::passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationOptions ValidationOptions::quick()
{
    ValidationOptions o;
    o.samples = 100'000;
    o.gain_draws = 1'000'000;
    o.populations = 100'000;
    o.sweep_trials = 50'000;
    o.tolerance_scale = 2.0;
    return o;
}

double sup_distance(const EmpiricalCdf& empirical, const std::function<double(double)>& cdf,
                    std::size_t probes)
{
    const auto& xs = empirical.sorted();
    std::vector<double> points{xs.front(), xs.back()};
    const std::size_t n = std::max<std::size_t>(probes, 1);
    for (std::size_t i = 1; i <= n; ++i)
        points.push_back(empirical.quantile(static_cast<double>(i) / static_cast<double>(n)));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    double worst = 0.0;
    for (double x : points) {
        const double below = std::nextafter(x, -std::numeric_limits<double>::infinity());
        worst = std::max(worst, std::abs(cdf(x) - empirical(x)));
        worst = std::max(worst, std::abs(cdf(below) - empirical.left_limit(x)));
    }
    return worst;
}

std::vector<double> sample_nonzero_gains(const AnalyticModel& model, std::uint64_t count,
                                         std::uint64_t seed)
{
    const RandomStreams streams(seed);
    std::vector<double> out;
    out.reserve(count);
    for (std::uint64_t i = 0; out.size() < count; ++i) {
        CounterRng rng = streams.engine(i, 0);
        const double h = channel_gain(model.geom, sample_user(model.mobility, rng));
        if (h > 0.0)
            out.push_back(squared(h));
    }
    return out;
}

std::vector<double> sample_ordered_gains(const AnalyticModel& model, int k, int k_min,
                                         std::uint64_t count, std::uint64_t seed)
{
    if (k < 1 || k > model.mobility.num_users)
        throw DomainError("sample_ordered_gains: rank must lie in [1, K]");
    const RandomStreams streams(seed);
    const auto needed = static_cast<std::size_t>(std::max(k, k_min));
    std::vector<double> out;
    out.reserve(count);
    std::vector<double> nonzero;
    for (std::uint64_t t = 0; out.size() < count; ++t) {
        const auto snap = sample_population(model.mobility, model.geom, streams, t);
        nonzero.clear();
        for (double h : snap.true_gains)
            if (h > 0.0)
                nonzero.push_back(squared(h));
        if (nonzero.size() < needed)
            continue;
        std::nth_element(nonzero.begin(), nonzero.begin() + (k - 1), nonzero.end());
        out.push_back(nonzero[static_cast<std::size_t>(k - 1)]);
    }
    return out;
}

std::vector<double> sample_group_gains(const AnalyticModel& model, GroupRole role,
                                       std::uint64_t count, std::uint64_t seed)
{
    const auto& s = model.scheme;
    if (s.kind != FeedbackKind::TwoBitInstant && s.kind != FeedbackKind::TwoBitMean)
        throw DomainError("sample_group_gains: scheme must be a two-bit kind");
    // Membership needs d on one side of the threshold; drawing d there directly leaves the
    // conditional law unchanged and avoids rejecting most draws.
    MobilityConfig mob = model.mobility;
    const double d_th = std::min(s.d_threshold, mob.d_max);
    if (role == GroupRole::Weak)
        mob.d_min = d_th;
    else
        mob.d_max = d_th;
    if (!(mob.d_min < mob.d_max))
        throw DomainError("sample_group_gains: the group's distance range is empty");

    const RandomStreams streams(seed);
    const double ell = model.geom.ell;
    std::vector<double> out;
    out.reserve(count);
    for (std::uint64_t i = 0; out.size() < count; ++i) {
        if (i > 1000 * count + 1'000'000)
            throw DomainError("sample_group_gains: group membership is too rare to sample");
        CounterRng rng = streams.engine(i, 0);
        const ReceiverState u = sample_user(mob, rng);
        const double fb_phi = s.kind == FeedbackKind::TwoBitInstant ? u.phi : u.mean_phi;
        const double fb_theta = std::abs(incidence_angle(u.d, fb_phi, ell));
        if (fb_theta > model.geom.half_fov)
            continue;
        const bool near = u.d <= s.d_threshold;
        const bool aligned = fb_theta <= s.theta_threshold;
        const bool member = role == GroupRole::Weak ? (!near && !aligned) : (near && aligned);
        if (member)
            out.push_back(squared(channel_gain(model.geom, u)));
    }
    return out;
}

CheckResult check_nonzero_probability(const AnalyticModel& model, const ValidationOptions& opt)
{
    const double p = UnorderedGainDistribution(analytic_side(model, opt)).nonzero_probability().value;
    const RandomStreams streams(opt.seed);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < opt.gain_draws; ++i) {
        CounterRng rng = streams.engine(i, 0);
        hits += channel_gain(model.geom, sample_user(model.mobility, rng)) > 0.0;
    }
    const double n = static_cast<double>(opt.gain_draws);
    const double freq = static_cast<double>(hits) / n;
    const double sigma = std::sqrt(p * (1.0 - p) / n);
    return make_result("nonzero-probability", std::abs(freq - p), kSigmas * sigma * opt.tolerance_scale,
                       format("analytic %.6f, empirical %.6f over %.0f draws", p, freq, n));
}

CheckResult check_knz_pmf(const AnalyticModel& model, int k_min, const ValidationOptions& opt)
{
    const UnorderedGainDistribution dist(analytic_side(model, opt));
    const int users = model.mobility.num_users;
    const RandomStreams streams(opt.seed + 1);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(users) + 1, 0);
    std::uint64_t conditioned = 0;
    for (std::uint64_t t = 0; t < opt.populations; ++t) {
        const auto snap = sample_population(model.mobility, model.geom, streams, t);
        const auto nz = std::count_if(snap.true_gains.begin(), snap.true_gains.end(),
                                      [](double h) { return h > 0.0; });
        if (nz >= k_min) {
            ++counts[static_cast<std::size_t>(nz)];
            ++conditioned;
        }
    }
    if (conditioned == 0)
        return make_result("knz-pmf(k_min=" + std::to_string(k_min) + ")",
                           std::numeric_limits<double>::infinity(), kSigmas, "no conditioned population");
    const double n = static_cast<double>(conditioned);
    double worst = 0.0;
    int worst_k = 0;
    for (int k = 0; k <= users; ++k) {
        const double pk = dist.knz_pmf(k, k_min);
        const double freq = static_cast<double>(counts[static_cast<std::size_t>(k)]) / n;
        const double sigma = std::sqrt(pk * (1.0 - pk) / n);
        const double z = sigma > 0.0 ? std::abs(freq - pk) / sigma
                                     : (freq == pk ? 0.0 : std::numeric_limits<double>::infinity());
        if (z > worst) {
            worst = z;
            worst_k = k;
        }
    }
    return make_result("knz-pmf(k_min=" + std::to_string(k_min) + ")", worst, kSigmas * opt.tolerance_scale,
                       format("largest deviation %.2f sigma at k = %.0f over %.0f populations", worst,
                              worst_k, n));
}

CheckResult check_unordered_cdf(const AnalyticModel& model, const ValidationOptions& opt)
{
    const UnorderedGainDistribution dist(analytic_side(model, opt));
    const EmpiricalCdf emp(sample_nonzero_gains(model, opt.samples, opt.seed + 2));
    const double d = sup_distance(emp, [&](double x) { return dist.cdf(x).value; });
    return make_result("cdf-unordered", d, kCdfTolerance * opt.tolerance_scale,
                       format("sup-distance over %.0f samples", static_cast<double>(emp.size())));
}

CheckResult check_ordered_cdf(const AnalyticModel& model, int k, int k_min, const ValidationOptions& opt)
{
    const UnorderedGainDistribution dist(analytic_side(model, opt));
    const EmpiricalCdf emp(sample_ordered_gains(model, k, k_min, opt.samples, opt.seed + 3 + k));
    const double d = sup_distance(emp, [&](double x) { return dist.ordered_cdf(x, k, k_min).value; });
    return make_result("cdf-ordered(k=" + std::to_string(k) + ")", d, kCdfTolerance * opt.tolerance_scale,
                       format("sup-distance over %.0f conditioned samples", static_cast<double>(emp.size())));
}

CheckResult check_group_cdf(const AnalyticModel& model, GroupVariant variant, GroupRole role,
                            const ValidationOptions& opt)
{
    const AnalyticModel m = with_kind(
        model, variant == GroupVariant::Instant ? FeedbackKind::TwoBitInstant : FeedbackKind::TwoBitMean);
    const GroupGainDistribution dist(analytic_side(m, opt), variant);
    const std::uint64_t seed = opt.seed + 100 + 2 * static_cast<std::uint64_t>(variant) +
                               static_cast<std::uint64_t>(role);
    const EmpiricalCdf emp(sample_group_gains(m, role, opt.samples, seed));
    const double d = sup_distance(emp, [&](double x) { return dist.cdf(x, role).value; });
    return make_result(std::string("cdf-group-") + variant_name(variant) + "(" + role_name(role) + ")", d,
                       kGroupCdfTolerance * opt.tolerance_scale,
                       format("sup-distance over %.0f members", static_cast<double>(emp.size())));
}

CheckResult check_group_variant_coincidence(const AnalyticModel& model, std::size_t points)
{
    if (model.mobility.delta_phi != 0.0)
        throw DomainError("check_group_variant_coincidence: requires delta_phi = 0");
    const GroupGainDistribution instant(with_kind(model, FeedbackKind::TwoBitInstant), GroupVariant::Instant);
    const GroupGainDistribution mean(with_kind(model, FeedbackKind::TwoBitMean), GroupVariant::Mean);
    const auto& prof = model.profile;
    const double lo = squared(prof.gain_factor(model.mobility.d_max) * std::cos(model.geom.half_fov)) * 0.5;
    const double hi = squared(prof.gain_factor(model.mobility.d_min)) * 1.01;
    double worst = 0.0;
    for (GroupRole role : {GroupRole::Weak, GroupRole::Strong}) {
        worst = std::max(worst, std::abs(instant.cdf(0.0, role).value - mean.cdf(0.0, role).value));
        for (std::size_t i = 0; i < points; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(points - 1);
            const double x = lo * std::pow(hi / lo, t);
            worst = std::max(worst, std::abs(instant.cdf(x, role).value - mean.cdf(x, role).value));
        }
    }
    return make_result("group-variant-coincidence", worst, kCoincidenceTolerance,
                       format("largest pointwise difference over %.0f points per role",
                              static_cast<double>(points + 1)));
}

CheckResult check_threshold_reduction(const NomaConfig& noma, std::uint64_t tuples, std::uint64_t seed)
{
    const RandomStreams streams(seed);
    const double bw = noma.alloc.share_weak;
    const double bs = noma.alloc.share_strong;
    const double rw = noma.targets.rate_weak;
    const double rs = noma.targets.rate_strong;
    auto rate = [](double sinr) { return 0.5 * std::log2(1.0 + std::exp(1.0) / (2.0 * kPi) * sinr); };

    std::uint64_t mismatches = 0;
    for (std::uint64_t t = 0; t < tuples; ++t) {
        CounterRng rng = streams.engine(t, 0);
        const double gamma = db_to_linear(rng.uniform(60.0, 320.0));
        const auto eta = eta_thresholds(noma.targets, noma.alloc, gamma);
        // Gains spread two decades around the thresholds so both outcomes occur often.
        const double hw = eta.eta_weak * std::pow(10.0, rng.uniform(-2.0, 2.0));
        const double hs = eta.eta_strong * std::pow(10.0, rng.uniform(-2.0, 2.0));

        const bool weak_out = rate(hw * bw * gamma / (hw * bs * gamma + 1.0)) < rw;
        const bool strong_out = rate(hs * bw * gamma / (hs * bs * gamma + 1.0)) < rw || rate(hs * bs * gamma) < rs;
        const PairOutage o = noma_pair_outcome(hw, hs, eta);
        mismatches += (o.weak != weak_out) || (o.strong != strong_out);
    }
    return make_result("threshold-reduction", static_cast<double>(mismatches), 0.0,
                       format("%.0f mismatches over %.0f random tuples", static_cast<double>(mismatches),
                              static_cast<double>(tuples)));
}

CheckResult check_sum_rate_agreement(const ExperimentConfig& config, FeedbackKind kind,
                                     const ValidationOptions& opt)
{
    ExperimentConfig mc = config;
    mc.schemes = {kind};
    mc.include_oma = true;
    mc.trials = opt.sweep_trials;
    mc.root_seed = opt.seed + 1000;
    mc.workers = opt.workers;
    mc.strategy.kind = is_group_kind(kind) ? SchedulingStrategy::Kind::Group : SchedulingStrategy::Kind::Individual;
    const auto simulated = run_sweep(mc);

    AnalyticModel model(config.geom, config.mobility, config.scheme(kind), config.quad);
    if (opt.profile_override)
        model.profile = *opt.profile_override;
    const auto analytic = analytic_sum_rate_sweep(model, config.noma, config.gamma_db, mc.strategy);

    double worst = 0.0;
    std::string detail = "all points agree";
    for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t g = 0; g < config.gamma_db.size(); ++g) {
            const CurvePoint& s = simulated[c].points[g];
            const CurvePoint& a = analytic[c].points[g];
            const double allowed = std::max(s.ci_halfwidth, kSumRateFloor) * opt.tolerance_scale;
            const double ratio = (s.flagged || a.flagged) ? std::numeric_limits<double>::infinity()
                                                          : std::abs(s.sum_rate - a.sum_rate) / allowed;
            if (ratio > worst) {
                worst = ratio;
                detail = analytic[c].label + format(" at %.1f dB: simulated %.4f, analytic %.4f", s.gamma_db,
                                                    s.sum_rate, a.sum_rate);
            }
        }
    }
    return make_result("sum-rate-agreement(" + std::string(to_string(kind)) + ")", worst, 1.0,
                       "largest |difference| / max(CI, 0.05); " + detail);
}

ValidationReport validate(const ExperimentConfig& config, const ValidationOptions& options)
{
    config.validate();
    ValidationReport report;
    auto run = [&](auto&& fn) {
        try {
            report.checks.push_back(fn());
        } catch (const Error& e) {
            report.checks.push_back(CheckResult{"error", std::numeric_limits<double>::infinity(), 0.0, false, e.what()});
        }
    };

    const auto has = [&](FeedbackKind k) {
        return std::find(config.schemes.begin(), config.schemes.end(), k) != config.schemes.end();
    };
    const bool individual = std::any_of(config.schemes.begin(), config.schemes.end(),
                                        [](FeedbackKind k) { return !is_group_kind(k); });

    const AnalyticModel model(config.geom, config.mobility, config.scheme(FeedbackKind::TwoBitInstant), config.quad);

    run([&] { return check_nonzero_probability(model, options); });
    run([&] { return check_knz_pmf(model, 0, options); });
    if (individual) {
        const int i = config.strategy.rank_weak;
        const int j = config.strategy.rank_strong;
        run([&] { return check_knz_pmf(model, j, options); });
        run([&] { return check_unordered_cdf(model, options); });
        run([&] { return check_ordered_cdf(model, i, j, options); });
        run([&] { return check_ordered_cdf(model, j, j, options); });
    }
    for (auto [kind, variant] : {std::pair{FeedbackKind::TwoBitInstant, GroupVariant::Instant},
                                 std::pair{FeedbackKind::TwoBitMean, GroupVariant::Mean}}) {
        if (!has(kind))
            continue;
        run([&] { return check_group_cdf(model, variant, GroupRole::Weak, options); });
        run([&] { return check_group_cdf(model, variant, GroupRole::Strong, options); });
    }
    if (has(FeedbackKind::TwoBitInstant) || has(FeedbackKind::TwoBitMean)) {
        MobilityConfig still = config.mobility;
        still.delta_phi = 0.0;
        run([&] {
            AnalyticModel m(config.geom, still, config.scheme(FeedbackKind::TwoBitInstant), config.quad);
            return check_group_variant_coincidence(m);
        });
    }
    run([&] { return check_threshold_reduction(config.noma, 100'000, options.seed + 3000); });
    for (FeedbackKind kind : config.schemes)
        if (has_analytic_form(kind))
            run([&] { return check_sum_rate_agreement(config, kind, options); });
    return report;
}

} // namespace vlcnoma
