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

#include "vlcnoma/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "vlcnoma/errors.hpp"
#include "vlcnoma/random.hpp"
#include "vlcnoma/units.hpp"

namespace vlcnoma {

namespace {

constexpr double kZ95 = 1.96;
constexpr std::uint64_t kChunk = 2048;

template <class Fn>
void rethrow_as_config(const char* field, Fn&& fn)
{
    try {
        fn();
    } catch (const DomainError& e) {
        throw ConfigError(field, e.what());
    }
}

bool is_individual(FeedbackKind kind) noexcept { return !is_group_kind(kind); }

Ordering individual_ordering(FeedbackKind kind, const PopulationSnapshot& reported)
{
    switch (kind) {
    case FeedbackKind::FullCsi:
        return order_full_csi(reported);
    case FeedbackKind::MeanAngle:
        return order_mean_gain(reported);
    case FeedbackKind::DistanceOnly:
        return order_distance(reported);
    default:
        throw DomainError("individual_ordering: not an individual scheme");
    }
}

PairSample to_sample(const ScheduleDecision& decision, const PopulationSnapshot& truth,
                     bool conditioned)
{
    PairSample s;
    s.conditioned = conditioned;
    if (decision.weak) {
        s.has_weak = true;
        const double h = truth.true_gains[*decision.weak];
        s.weak_gain_sq = h * h;
    }
    if (decision.strong) {
        s.has_strong = true;
        const double h = truth.true_gains[*decision.strong];
        s.strong_gain_sq = h * h;
    }
    return s;
}

// Outcome tallies of one (curve, SNR) cell over the conditioned trials.
struct Tally {
    std::uint64_t trials = 0;
    std::uint64_t weak_ok = 0;
    std::uint64_t strong_ok = 0;
    std::uint64_t both_ok = 0;

    Tally& operator+=(const Tally& o) noexcept
    {
        trials += o.trials;
        weak_ok += o.weak_ok;
        strong_ok += o.strong_ok;
        both_ok += o.both_ok;
        return *this;
    }
};

void record(Tally& t, const PairSample& s, const GainThresholds& eta)
{
    if (!s.conditioned)
        return;
    ++t.trials;
    const bool weak_ok = s.has_weak && s.weak_gain_sq > eta.eta_weak;
    const bool strong_ok = s.has_strong && s.strong_gain_sq > eta.eta_strong;
    t.weak_ok += weak_ok;
    t.strong_ok += strong_ok;
    t.both_ok += weak_ok && strong_ok;
}

CurvePoint summarise(double gamma_db, const Tally& t, std::uint64_t total, const TargetRates& rates)
{
    CurvePoint p;
    p.gamma_db = gamma_db;
    p.conditioning_rate = static_cast<double>(t.trials) / static_cast<double>(total);
    if (t.trials == 0) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        p.sum_rate = p.ci_halfwidth = p.outage_weak = p.outage_strong = nan;
        p.flagged = true;
        return p;
    }
    const double n = static_cast<double>(t.trials);
    const double pw = static_cast<double>(t.weak_ok) / n;
    const double ps = static_cast<double>(t.strong_ok) / n;
    const double pb = static_cast<double>(t.both_ok) / n;
    const double rw = rates.rate_weak;
    const double rs = rates.rate_strong;
    p.outage_weak = 1.0 - pw;
    p.outage_strong = 1.0 - ps;
    p.sum_rate = rw * pw + rs * ps;
    if (t.trials == 1) {
        p.ci_halfwidth = kZ95 * (rw + rs) / 2.0;
    } else {
        const double second = rw * rw * pw + rs * rs * ps + 2.0 * rw * rs * pb;
        const double var = std::max(0.0, second - p.sum_rate * p.sum_rate) * n / (n - 1.0);
        p.ci_halfwidth = kZ95 * std::sqrt(var / n);
    }
    return p;
}

} // namespace

void ExperimentConfig::validate() const
{
    rethrow_as_config("geometry", [&] { (void)LedGeometry::make(geom.ell, geom.hpbw, geom.detector_area, geom.half_fov); });
    rethrow_as_config("mobility", [&] { mobility.validate(); });
    if (schemes.empty())
        throw ConfigError("scheduling.schemes", "at least one scheme is required");
    for (FeedbackKind kind : schemes) {
        rethrow_as_config("scheduling.schemes", [&] { scheme(kind).validate(geom); });
        if (is_individual(kind)) {
            if (!(strategy.rank_weak >= 1 && strategy.rank_weak < strategy.rank_strong))
                throw ConfigError("scheduling.rank_weak", "ranks must satisfy 1 <= rank_weak < rank_strong");
            if (strategy.rank_strong > mobility.num_users)
                throw ConfigError("scheduling.rank_strong", "rank exceeds the number of users");
        }
    }
    if (gamma_db.empty())
        throw ConfigError("sweep.gamma_db", "the SNR grid is empty");
    for (double g : gamma_db)
        if (!std::isfinite(g))
            throw ConfigError("sweep.gamma_db", "SNR values must be finite");
    if (std::adjacent_find(gamma_db.begin(), gamma_db.end(), std::greater_equal<>{}) != gamma_db.end())
        throw ConfigError("sweep.gamma_db", "the SNR grid must be strictly increasing");
    if (trials == 0)
        throw ConfigError("sweep.trials", "must be positive");
    if (noise && !(noise->sigma_d >= 0.0 && noise->sigma_phi >= 0.0))
        throw ConfigError("noise", "standard deviations must be nonnegative");
    rethrow_as_config("quadrature", [&] { quad.validate(); });
}

std::vector<PairSample> run_trial(const ExperimentConfig& config, std::uint64_t trial)
{
    const RandomStreams streams(config.root_seed);
    const PopulationSnapshot truth = sample_population(config.mobility, config.geom, streams, trial);

    PopulationSnapshot noisy_copy;
    if (config.noise) {
        std::vector<ReceiverState> reported;
        reported.reserve(truth.size());
        for (std::size_t k = 0; k < truth.size(); ++k) {
            CounterRng rng = streams.engine(trial, lanes::noise(k));
            reported.push_back(noisy_estimates(truth.users[k], config.noise->sigma_d,
                                               config.noise->sigma_phi, rng));
        }
        noisy_copy = make_snapshot(std::move(reported), config.geom);
    }
    const PopulationSnapshot& reported = config.noise ? noisy_copy : truth;

    std::vector<PairSample> out;
    out.reserve(config.schemes.size());
    for (FeedbackKind kind : config.schemes) {
        if (is_individual(kind)) {
            const int j = config.strategy.rank_strong;
            const ScheduleDecision d =
                select_individual(individual_ordering(kind, reported), config.strategy.rank_weak, j, j);
            out.push_back(to_sample(d, truth, d.transmits()));
            continue;
        }
        const auto reports = collect_group_feedback(reported, config.scheme(kind), config.geom);
        const GroupAssignment groups = group_users(reports);
        CounterRng rng = streams.engine(trial, lanes::kGroupPick);
        const ScheduleDecision d = select_group_pair(groups, rng);
        const bool conditioned =
            config.strategy.empty_group == EmptyGroupPolicy::Outage || d.transmits();
        out.push_back(to_sample(d, truth, conditioned));
    }
    return out;
}

std::vector<Curve> run_sweep(const ExperimentConfig& config)
{
    config.validate();
    const std::size_t num_schemes = config.schemes.size();
    const std::size_t num_gamma = config.gamma_db.size();
    const std::size_t num_curves = num_schemes + (config.include_oma ? 1 : 0);

    std::vector<GainThresholds> noma_eta;
    std::vector<GainThresholds> oma_eta;
    for (double db : config.gamma_db) {
        const double gamma = db_to_linear(db);
        noma_eta.push_back(eta_thresholds(config.noma.targets, config.noma.alloc, gamma));
        oma_eta.push_back(oma_thresholds(config.noma.targets, gamma, config.noma.oma_model));
    }

    std::vector<Tally> totals(num_curves * num_gamma);
    std::mutex totals_mutex;
    std::atomic<std::uint64_t> next_chunk{0};
    std::exception_ptr failure;

    auto worker = [&] {
        std::vector<Tally> local(totals.size());
        try {
            for (;;) {
                const std::uint64_t begin = next_chunk.fetch_add(1) * kChunk;
                if (begin >= config.trials)
                    break;
                const std::uint64_t end = std::min(config.trials, begin + kChunk);
                for (std::uint64_t t = begin; t < end; ++t) {
                    const auto samples = run_trial(config, t);
                    for (std::size_t s = 0; s < num_schemes; ++s)
                        for (std::size_t g = 0; g < num_gamma; ++g)
                            record(local[s * num_gamma + g], samples[s], noma_eta[g]);
                    if (config.include_oma)
                        for (std::size_t g = 0; g < num_gamma; ++g)
                            record(local[num_schemes * num_gamma + g], samples.front(), oma_eta[g]);
                }
            }
        } catch (...) {
            const std::lock_guard lock(totals_mutex);
            if (!failure)
                failure = std::current_exception();
            return;
        }
        // Integer tallies: the sum does not depend on which worker ran which trial.
        const std::lock_guard lock(totals_mutex);
        for (std::size_t c = 0; c < totals.size(); ++c)
            totals[c] += local[c];
    };

    unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
    const auto chunks = (config.trials + kChunk - 1) / kChunk;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<Curve> curves;
    for (std::size_t c = 0; c < num_curves; ++c) {
        const bool oma = c == num_schemes;
        Curve curve;
        curve.label = std::string(oma ? "oma-" : "noma-") +
                      std::string(to_string(config.schemes[oma ? 0 : c]));
        for (std::size_t g = 0; g < num_gamma; ++g)
            curve.points.push_back(summarise(config.gamma_db[g], totals[c * num_gamma + g],
                                             config.trials, config.noma.targets));
        curves.push_back(std::move(curve));
    }
    return curves;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples))
{
    if (sorted_.empty())
        throw DomainError("EmpiricalCdf: empty sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const noexcept
{
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::left_limit(double x) const noexcept
{
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::quantile(double p) const
{
    if (!(p > 0.0 && p <= 1.0))
        throw DomainError("EmpiricalCdf::quantile: p must lie in (0, 1]");
    const auto n = static_cast<double>(sorted_.size());
    const auto idx = static_cast<std::size_t>(std::ceil(p * n - 1e-9));
    return sorted_[std::clamp<std::size_t>(idx, 1, sorted_.size()) - 1];
}

} // namespace vlcnoma
