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

#include "vlcnoma/random.hpp"

namespace vlcnoma {

namespace {
constexpr std::uint64_t kGoldenGamma = 0x9E37'79B9'7F4A'7C15ull;
}

std::uint64_t mix64(std::uint64_t x) noexcept
{
    x ^= x >> 30;
    x *= 0xBF58'476D'1CE4'E5B9ull;
    x ^= x >> 27;
    x *= 0x94D0'49BB'1331'11EBull;
    x ^= x >> 31;
    return x;
}

CounterRng::result_type CounterRng::operator()() noexcept
{
    state_ += kGoldenGamma;
    return mix64(state_);
}

CounterRng RandomStreams::engine(std::uint64_t trial, std::uint64_t lane) const noexcept
{
    std::uint64_t h = mix64(root_ ^ 0x5851'F42D'4C95'7F2Dull);
    h = mix64(h + kGoldenGamma * (trial + 1));
    h = mix64(h ^ (lane * 0xD6E8'FEB8'6659'FD93ull));
    return CounterRng(h);
}

} // namespace vlcnoma
