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

// Plain-text run configuration.
//
// INI sections mirror the library types; angles are given in degrees, distances in metres and
// SNRs in dB:
//
//   [geometry]    led_height, hpbw_deg, detector_area, half_fov_deg
//   [mobility]    num_users, d_min, d_max, delta_phi_deg, mean_phi_min_deg, mean_phi_max_deg
//   [noma]        share_weak, share_strong, power_interpretation (power|amplitude),
//                 rate_weak, rate_strong, oma_model (time-shared|literal)
//   [scheduling]  schemes (comma list), rank_weak, rank_strong, empty_group (condition|outage),
//                 d_threshold_coeff, theta_threshold_coeff, d_threshold, theta_threshold_deg
//   [sweep]       gamma_db (comma list or start:step:stop), trials, seed, include_oma, workers
//   [noise]       enabled, sigma_d, sigma_phi_deg
//   [quadrature]  abs_tol, rel_tol, max_subdivisions
//
// Each [series.NAME] section holds "section.key = value" overrides on top of the base and
// defines one series of the run; without series sections the run has a single series.
// Command-line overrides "section.key=value" apply to every series,
// "series.NAME.section.key=value" to one.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vlcnoma/experiment.hpp"

namespace vlcnoma {

struct RunConfig {
    std::string name;
    std::vector<ExperimentConfig> series; // label = series name
};

/// Parses INI text and applies `overrides`. Throws ConfigError naming the offending field.
RunConfig parse_config(std::string_view text, std::span<const std::string> overrides = {},
                       std::string name = "config");

/// Reads and parses a file; the run is named after the file stem.
RunConfig load_config_file(const std::string& path, std::span<const std::string> overrides = {});

/// Bundled configurations: "fig2" (individual scheduling), "fig3" (two-bit group feedback),
/// "fig4" (noisy feedback).
std::vector<std::string> preset_names();
/// INI text of a preset. Throws ConfigError("preset", ...) for an unknown name.
std::string preset_text(std::string_view name);
RunConfig load_preset(std::string_view name, std::span<const std::string> overrides = {});

/// Fully resolved INI text of one series; parsing it reproduces the series exactly.
std::string render_config(const ExperimentConfig& series);

/// Fully resolved INI text of a whole run, one [series.NAME] section per series.
std::string render_run_config(const RunConfig& run);

/// Parses "a, b, c" or "start:step:stop" (inclusive) into SNR values.
std::vector<double> parse_gamma_grid(std::string_view text);

} // namespace vlcnoma
