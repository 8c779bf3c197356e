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

// Acceptance suite: one PASS/FAIL line per criterion, evaluated at full sample sizes.
//
//   vlcnoma_acceptance            run every criterion
//   vlcnoma_acceptance --only A4  run a single criterion
//
// The exit status is 0 when every selected criterion passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstring>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "vlcnoma/analytic.hpp"
#include "vlcnoma/config.hpp"
#include "vlcnoma/experiment.hpp"
#include "vlcnoma/random.hpp"
#include "vlcnoma/units.hpp"
#include "vlcnoma/validation.hpp"

using namespace vlcnoma;

namespace {

struct Verdict {
    bool passed = false;
    std::string detail;
};

std::string format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string format(const char* fmt, ...)
{
    char buf[1024];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

constexpr std::uint64_t kTrials = 1'000'000;

const ExperimentConfig& series_of(const RunConfig& run, const std::string& label)
{
    for (const auto& s : run.series)
        if (s.label == label)
            return s;
    throw std::runtime_error("no series " + label);
}

AnalyticModel model_for(const ExperimentConfig& s, FeedbackKind kind)
{
    return AnalyticModel(s.geom, s.mobility, s.scheme(kind), s.quad);
}

const Curve& curve_of(const std::vector<Curve>& curves, const std::string& label)
{
    for (const auto& c : curves)
        if (c.label == label)
            return c;
    throw std::runtime_error("no curve " + label);
}

// High-SNR plateau: the sum rate at the largest grid point.
double plateau(const std::vector<Curve>& curves, const std::string& label)
{
    return curve_of(curves, label).points.back().sum_rate;
}

std::vector<Curve> simulate(ExperimentConfig s, std::uint64_t trials = kTrials)
{
    s.trials = trials;
    s.workers = 0;
    return run_sweep(s);
}

ValidationOptions full_options()
{
    ValidationOptions o;
    o.workers = 0;
    return o;
}

std::string check_line(const CheckResult& r)
{
    return format("%s %.4g/%.4g", r.name.c_str(), r.measured, r.tolerance);
}

// ---------------------------------------------------------------------------------------------

Verdict a1_ordered_gain_cdfs()
{
    const auto run = load_preset("fig2");
    const auto opt = full_options();
    bool ok = true;
    double worst = 0.0;
    for (const auto& s : run.series) {
        const auto m = model_for(s, FeedbackKind::FullCsi);
        const int j = s.strategy.rank_strong;
        for (const auto& r : {check_unordered_cdf(m, opt), check_ordered_cdf(m, s.strategy.rank_weak, j, opt),
                              check_ordered_cdf(m, j, j, opt)}) {
            ok = ok && r.passed && r.tolerance <= 0.01;
            worst = std::max(worst, r.measured);
        }
    }
    return {ok, format("max sup-distance %.4f over unordered and ranks 1, 10 (tol 0.01, 1e6 samples)", worst)};
}

Verdict a2_nonzero_law()
{
    const auto run = load_preset("fig2");
    const auto opt = full_options();
    bool ok = true;
    std::string detail;
    for (const auto& s : run.series) {
        const auto m = model_for(s, FeedbackKind::FullCsi);
        for (const auto& r : {check_nonzero_probability(m, opt), check_knz_pmf(m, 0, opt),
                              check_knz_pmf(m, s.strategy.rank_strong, opt)}) {
            ok = ok && r.passed;
            detail += (detail.empty() ? "" : "; ") + s.label + " " + check_line(r);
        }
    }
    return {ok, "max |z| vs 3-sigma: " + detail};
}

Verdict a3_group_cdfs()
{
    const auto run = load_preset("fig3");
    const auto opt = full_options();
    bool ok = true;
    double worst = 0.0;
    for (const auto& s : run.series) {
        for (auto [kind, variant] : {std::pair{FeedbackKind::TwoBitInstant, GroupVariant::Instant},
                                     std::pair{FeedbackKind::TwoBitMean, GroupVariant::Mean}}) {
            for (auto role : {GroupRole::Weak, GroupRole::Strong}) {
                const auto r = check_group_cdf(model_for(s, kind), variant, role, opt);
                ok = ok && r.passed && r.tolerance <= 0.015;
                worst = std::max(worst, r.measured);
            }
        }
    }
    const auto& flat = series_of(run, "dphi0");
    const auto c = check_group_variant_coincidence(model_for(flat, FeedbackKind::TwoBitInstant), 200);
    ok = ok && c.passed && c.tolerance <= 1e-6;
    return {ok, format("max sup-distance %.4f (tol 0.015); zero-deviation coincidence %.2e (tol 1e-6)", worst,
                       c.measured)};
}

Verdict a4_full_csi_sweep()
{
    const auto run = load_preset("fig2");
    bool ok = true;
    double worst_ratio = 0.0;
    int dominance_violations = 0;
    std::string plateaus;
    for (auto s : run.series) {
        s.schemes = {FeedbackKind::FullCsi};
        s.include_oma = true;
        const auto mc = simulate(s);
        const auto an = analytic_sum_rate_sweep(model_for(s, FeedbackKind::FullCsi), s.noma, s.gamma_db, s.strategy);
        const auto& mc_noma = curve_of(mc, "noma-full-csi");
        const auto& mc_oma = curve_of(mc, "oma-full-csi");
        for (std::size_t g = 0; g < s.gamma_db.size(); ++g) {
            const auto& n = mc_noma.points[g];
            const auto& o = mc_oma.points[g];
            if (n.sum_rate + n.ci_halfwidth < o.sum_rate - o.ci_halfwidth)
                ++dominance_violations;
            const auto& an_n = an[0].points[g];
            const auto& an_o = an[1].points[g];
            if (an_n.flagged || an_o.flagged || n.flagged || o.flagged) {
                ok = false;
                continue;
            }
            if (an_n.sum_rate + an_n.ci_halfwidth < an_o.sum_rate - an_o.ci_halfwidth)
                ++dominance_violations;
            worst_ratio = std::max(worst_ratio, std::abs(n.sum_rate - an_n.sum_rate) / std::max(n.ci_halfwidth, 0.05));
            worst_ratio = std::max(worst_ratio, std::abs(o.sum_rate - an_o.sum_rate) / std::max(o.ci_halfwidth, 0.05));
        }
        const double p_mc = mc_noma.points.back().sum_rate;
        const double p_an = an[0].points.back().sum_rate;
        ok = ok && std::abs(p_mc - 12.0) <= 0.05 && std::abs(p_an - 12.0) <= 0.05;
        plateaus += format("%s%s plateau mc %.3f analytic %.3f", plateaus.empty() ? "" : ", ", s.label.c_str(), p_mc,
                           p_an);
    }
    ok = ok && dominance_violations == 0 && worst_ratio <= 1.0;
    return {ok, format("NOMA<OMA points %d; worst |mc-analytic|/max(CI,0.05) %.3f (tol 1); ", dominance_violations,
                       worst_ratio) +
                    plateaus};
}

Verdict plateau_gap(const std::string& preset, const std::string& series, const std::string& better,
                    const std::string& worse, double lo, double hi)
{
    const auto run = load_preset(preset);
    const auto curves = simulate(series_of(run, series));
    const double gap = plateau(curves, better) - plateau(curves, worse);
    return {gap >= lo && gap <= hi,
            format("%s: %s %.3f, %s %.3f, gap %.3f (accepted [%.2f, %.2f])", series.c_str(), better.c_str(),
                   plateau(curves, better), worse.c_str(), plateau(curves, worse), gap, lo, hi)};
}

Verdict a5_distance_only_gap()
{
    return plateau_gap("fig2", "dphi25", "noma-full-csi", "noma-distance-only", 6.5, 9.5);
}

Verdict a6_mean_angle_gap()
{
    return plateau_gap("fig2", "dphi25", "noma-full-csi", "noma-mean-angle", -std::numeric_limits<double>::infinity(),
                       1.0);
}

Verdict a7_two_bit_schemes()
{
    const auto run = load_preset("fig3");
    const auto& flat = series_of(run, "dphi0");
    const auto& tilted = series_of(run, "dphi25");
    const auto mc_flat = simulate(flat);
    const auto mc_tilted = simulate(tilted);
    const double i_flat = plateau(mc_flat, "noma-two-bit-instant");
    const double i_tilted = plateau(mc_tilted, "noma-two-bit-instant");
    const double ii_tilted = plateau(mc_tilted, "noma-two-bit-mean");
    const double robustness = std::abs(i_flat - i_tilted);
    const double gap = i_tilted - ii_tilted;
    const std::vector<double> top{tilted.gamma_db.back()};
    const auto an_i = analytic_sum_rate_sweep(model_for(tilted, FeedbackKind::TwoBitInstant), tilted.noma, top,
                                              tilted.strategy);
    const auto an_ii = analytic_sum_rate_sweep(model_for(tilted, FeedbackKind::TwoBitMean), tilted.noma, top,
                                               tilted.strategy);
    const bool ok = robustness <= 0.2 && std::abs(gap) <= 0.3;
    return {ok, format("scheme I plateau dphi0 %.3f vs dphi25 %.3f, diff %.3f (tol 0.2); scheme II %.3f, gap %.3f "
                       "(tol 0.3); analytic gap %.3f",
                       i_flat, i_tilted, robustness, ii_tilted, gap,
                       an_i[0].points[0].sum_rate - an_ii[0].points[0].sum_rate)};
}

Verdict a8_noisy_feedback()
{
    const auto run = load_preset("fig4");
    const auto clean = simulate(series_of(run, "noiseless"));
    const auto noisy = simulate(series_of(run, "noisy"));
    const double mean_change = std::abs(plateau(clean, "noma-mean-angle") - plateau(noisy, "noma-mean-angle"));
    const double csi_loss = plateau(clean, "noma-full-csi") - plateau(noisy, "noma-full-csi");
    const bool ok = mean_change <= 0.1 && csi_loss >= 0.0 && csi_loss <= 1.0;
    return {ok, format("mean-angle plateau change %.3f (tol 0.1); full-csi degradation %.3f (accepted [0, 1])",
                       mean_change, csi_loss)};
}

Verdict a9_threshold_reduction()
{
    const auto run = load_preset("fig2");
    const auto r = check_threshold_reduction(run.series.front().noma, 100000, 9);
    return {r.passed && r.measured == 0.0, format("%.0f mismatches in 1e5 tuples", r.measured)};
}

// --- property suite ---------------------------------------------------------------------------

struct PropertyTally {
    int checked = 0;
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what)
    {
        ++checked;
        if (!ok)
            failures.push_back(what);
    }
};

std::vector<double> log_grid(double hi, std::size_t n)
{
    std::vector<double> xs;
    const double lo = hi * 1e-6;
    for (std::size_t k = 0; k < n; ++k)
        xs.push_back(lo * std::pow(hi / lo, double(k) / double(n - 1)));
    return xs;
}

void check_cdf_shape(PropertyTally& t, const std::string& name, const std::vector<double>& xs,
                     const std::function<double(double)>& f)
{
    bool ok = true;
    double prev = -1.0;
    for (double x : xs) {
        const double v = f(x);
        ok = ok && v >= 0.0 && v <= 1.0 && v >= prev - 1e-9;
        prev = v;
    }
    t.expect(ok && std::abs(prev - 1.0) <= 1e-9, name + " monotone and normalised");
}

bool same_curves(const std::vector<Curve>& a, const std::vector<Curve>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t c = 0; c < a.size(); ++c)
        for (std::size_t g = 0; g < a[c].points.size(); ++g)
            if (a[c].points[g].sum_rate != b[c].points[g].sum_rate ||
                a[c].points[g].ci_halfwidth != b[c].points[g].ci_halfwidth)
                return false;
    return true;
}

Verdict a10_property_suite()
{
    PropertyTally t;
    const auto fig2 = load_preset("fig2");
    const auto fig3 = load_preset("fig3");

    // CDF shape and stochastic ordering.
    for (const auto& s : fig2.series) {
        const auto m = model_for(s, FeedbackKind::FullCsi);
        const UnorderedGainDistribution dist(m);
        const auto xs = log_grid(1.2 * std::pow(m.geom.peak_gain(), 2), 200);
        check_cdf_shape(t, s.label + " unordered", xs, [&](double x) { return dist.cdf(x).value; });
        for (int k : {1, 10})
            check_cdf_shape(t, s.label + " ordered k=" + std::to_string(k), xs,
                            [&](double x) { return dist.ordered_cdf(x, k, 10).value; });
        bool ordered = true;
        for (double x : xs) {
            double prev = 1.0;
            for (int k = 1; k <= m.mobility.num_users; ++k) {
                const double v = dist.ordered_cdf(x, k, 10).value;
                ordered = ordered && v <= prev + 1e-12;
                prev = v;
            }
        }
        t.expect(ordered, s.label + " ordered CDFs decrease in rank");
    }
    for (const auto& s : fig3.series) {
        for (auto [kind, variant] : {std::pair{FeedbackKind::TwoBitInstant, GroupVariant::Instant},
                                     std::pair{FeedbackKind::TwoBitMean, GroupVariant::Mean}}) {
            const auto m = model_for(s, kind);
            const GroupGainDistribution dist(m, variant);
            const auto xs = log_grid(1.2 * std::pow(m.geom.peak_gain(), 2), 200);
            for (auto role : {GroupRole::Weak, GroupRole::Strong})
                check_cdf_shape(t, s.label + " group CDF", xs, [&](double x) { return dist.cdf(x, role).value; });
        }
    }

    // Determinism under parallelism.
    for (const auto* run : {&fig2, &fig3}) {
        auto s = run->series.back();
        s.trials = 20000;
        s.workers = 1;
        const auto one = run_sweep(s);
        s.workers = 4;
        const auto four = run_sweep(s);
        t.expect(same_curves(one, four), run->name + " sweep independent of worker count");
    }

    // Degeneracy collapses.
    {
        const auto& flat = series_of(fig3, "dphi0");
        const auto c = check_group_variant_coincidence(model_for(flat, FeedbackKind::TwoBitInstant), 200);
        t.expect(c.passed, "zero deviation: mean-angle group CDFs equal instantaneous ones");
        const auto& s = series_of(fig3, "dphi25");
        const AnalyticModel full(s.geom, s.mobility,
                                 FeedbackScheme{FeedbackKind::TwoBitInstant, s.mobility.d_max, s.geom.half_fov}, s.quad);
        const GroupGainDistribution strong(full, GroupVariant::Instant);
        const UnorderedGainDistribution all(full);
        double worst = 0.0;
        for (double x : log_grid(1.2 * std::pow(full.geom.peak_gain(), 2), 200))
            worst = std::max(worst, std::abs(strong.cdf(x, GroupRole::Strong).value - all.cdf(x).value));
        t.expect(worst <= 1e-8, format("full thresholds: strong group equals all nonzero users (%.1e)", worst));
    }

    // Quadrature halving stability on random probes.
    {
        const auto& s = series_of(fig3, "dphi25");
        auto coarse_i = model_for(s, FeedbackKind::FullCsi);
        auto fine_i = coarse_i;
        fine_i.quad = coarse_i.quad.halved();
        auto coarse_g = model_for(s, FeedbackKind::TwoBitMean);
        auto fine_g = coarse_g;
        fine_g.quad = coarse_g.quad.halved();
        const UnorderedGainDistribution ua(coarse_i), ub(fine_i);
        const GroupGainDistribution ga(coarse_g, GroupVariant::Mean), gb(fine_g, GroupVariant::Mean);
        CounterRng rng(2718);
        const double top = std::pow(coarse_i.geom.peak_gain(), 2);
        int unstable = 0;
        for (int n = 0; n < 50; ++n) {
            const double x = top * std::pow(10.0, rng.uniform(-5.0, 0.0));
            const auto u = ua.cdf(x);
            unstable += std::abs(u.value - ub.cdf(x).value) > u.abs_error + 1e-15;
            const auto o = ua.ordered_cdf(x, 10, 10);
            unstable += std::abs(o.value - ub.ordered_cdf(x, 10, 10).value) > o.abs_error + 1e-15;
            const auto role = n % 2 ? GroupRole::Weak : GroupRole::Strong;
            const auto g = ga.cdf(x, role);
            unstable += std::abs(g.value - gb.cdf(x, role).value) > g.abs_error + 1e-15;
        }
        t.expect(unstable == 0, format("halving tolerances stays within the error estimate (%d unstable)", unstable));
    }

    std::string detail = format("%d/%d properties hold", t.checked - int(t.failures.size()), t.checked);
    for (const auto& f : t.failures)
        detail += "; failed: " + f;
    return {t.failures.empty(), detail};
}

struct Criterion {
    const char* id;
    double time_limit_s; // 0: no runtime bound
    Verdict (*run)();
};

const Criterion kCriteria[] = {
    {"A1", 120, a1_ordered_gain_cdfs}, {"A2", 120, a2_nonzero_law},     {"A3", 0, a3_group_cdfs},
    {"A4", 600, a4_full_csi_sweep},    {"A5", 0, a5_distance_only_gap}, {"A6", 0, a6_mean_angle_gap},
    {"A7", 0, a7_two_bit_schemes},     {"A8", 0, a8_noisy_feedback},    {"A9", 0, a9_threshold_reduction},
    {"A10", 0, a10_property_suite},
};

} // namespace

int main(int argc, char** argv)
{
    std::string only;
    for (int k = 1; k < argc; ++k) {
        if (std::strcmp(argv[k], "--only") == 0 && k + 1 < argc) {
            only = argv[++k];
        } else {
            std::fprintf(stderr, "usage: %s [--only A<n>]\n", argv[0]);
            return 64;
        }
    }
    bool any = false;
    bool all_passed = true;
    for (const auto& c : kCriteria) {
        if (!only.empty() && only != c.id)
            continue;
        any = true;
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs > c.time_limit_s) {
            v.passed = false;
            v.detail += format("; runtime %.0f s exceeds %.0f s", secs, c.time_limit_s);
        }
        std::printf("%s %s %s [%.1f s]\n", v.passed ? "PASS" : "FAIL", c.id, v.detail.c_str(), secs);
        std::fflush(stdout);
        all_passed = all_passed && v.passed;
    }
    if (!any) {
        std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
        return 64;
    }
    return all_passed ? 0 : 1;
}
