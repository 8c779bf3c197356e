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

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "vlcnoma/config.hpp"
#include "vlcnoma/errors.hpp"

namespace vlcnoma {

namespace {

// Indoor cell shared by every figure: K = 20 users under a 2 m high LED with a 60 degree
// half-power beamwidth, 1 cm^2 detectors with a 100 degree FOV, users within 10 m.
constexpr std::string_view kCommon = R"(
[geometry]
led_height = 2
hpbw_deg = 60
detector_area = 1e-4
half_fov_deg = 50

[mobility]
num_users = 20
d_min = 0
d_max = 10

[noma]
; power shares of the weak and strong user
share_weak = 0.984375
share_strong = 0.015625
power_interpretation = power
rate_weak = 2
rate_strong = 10
oma_model = time-shared

[sweep]
gamma_db = 120:5:280
trials = 100000
seed = 20190101
include_oma = true
)";

// Individual scheduling of ranks 1 and 10 with full, mean-angle and distance-only feedback,
// static (0 deg) and moving (25 deg) receivers.
constexpr std::string_view kFig2 = R"(
[scheduling]
schemes = full-csi, mean-angle, distance-only
rank_weak = 1
rank_strong = 10

[series.dphi0]
mobility.delta_phi_deg = 0

[series.dphi25]
mobility.delta_phi_deg = 25
)";

// Group scheduling with thresholds at one tenth of the cell radius and of the half FOV.
constexpr std::string_view kFig3 = R"(
[scheduling]
schemes = two-bit-instant, two-bit-mean, one-bit-distance
d_threshold_coeff = 0.1
theta_threshold_coeff = 0.1
empty_group = condition

[series.dphi0]
mobility.delta_phi_deg = 0

[series.dphi25]
mobility.delta_phi_deg = 25
)";

// Individual scheduling at 25 deg with exact and noisy feedback.
constexpr std::string_view kFig4 = R"(
[scheduling]
schemes = full-csi, mean-angle, distance-only
rank_weak = 1
rank_strong = 10

[noise]
sigma_d = 0.05
sigma_phi_deg = 2.5

[series.noiseless]
mobility.delta_phi_deg = 25
noise.enabled = false

[series.noisy]
mobility.delta_phi_deg = 25
noise.enabled = true
)";

constexpr std::array<std::pair<std::string_view, std::string_view>, 3> kPresets{{
    {"fig2", kFig2},
    {"fig3", kFig3},
    {"fig4", kFig4},
}};

} // namespace

std::vector<std::string> preset_names()
{
    std::vector<std::string> names;
    for (const auto& [name, body] : kPresets)
        names.emplace_back(name);
    return names;
}

std::string preset_text(std::string_view name)
{
    const auto it = std::find_if(kPresets.begin(), kPresets.end(),
                                 [&](const auto& p) { return p.first == name; });
    if (it == kPresets.end())
        throw ConfigError("preset", "unknown preset '" + std::string(name) + "'");
    // The figure parts only add sections the common part does not have.
    return std::string(kCommon) + std::string(it->second);
}

} // namespace vlcnoma
