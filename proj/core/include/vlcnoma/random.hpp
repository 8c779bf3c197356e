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

#include <cstdint>
#include <limits>

namespace vlcnoma {

/// SplitMix64 finaliser; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Counter-based generator: output n is mix64(seed + n * golden_gamma). Satisfies
/// UniformRandomBitGenerator, so it plugs into the <random> distributions.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

private:
    std::uint64_t state_;
};

/// Lane identifiers for the per-trial sub-streams.
namespace lanes {
constexpr std::uint64_t user(std::uint64_t k) noexcept { return 2 * k; }
constexpr std::uint64_t noise(std::uint64_t k) noexcept { return 2 * k + 1; }
inline constexpr std::uint64_t kGroupPick = 0xFFFF'FFFF'0000'0001ull;
} // namespace lanes

/// Derives independent sub-streams from one root seed. The stream for (trial, lane) depends
/// only on those two counters, so results do not depend on the order in which trials run.
class RandomStreams {
public:
    explicit RandomStreams(std::uint64_t root_seed) noexcept : root_(root_seed) {}

    std::uint64_t root_seed() const noexcept { return root_; }
    CounterRng engine(std::uint64_t trial, std::uint64_t lane) const noexcept;

private:
    std::uint64_t root_;
};

} // namespace vlcnoma
