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

// Run manifest written next to every output file. It records the configuration source and
// overrides verbatim, so feeding them back reproduces the output exactly.

#include <cstdint>
#include <string>
#include <vector>

namespace vlcnoma::cli {

struct RunManifest {
    std::string command;
    std::string run_name;
    std::string source_kind; // "preset" or "file"
    std::string source_name; // preset name or file path
    std::string source_text; // configuration text as read
    std::vector<std::string> overrides;
    std::string resolved_config; // every series with all values spelled out
    std::uint64_t root_seed = 0;
    bool quick = false;
    std::vector<std::string> outputs;
    std::string started_utc;
    double elapsed_seconds = 0.0;
};

/// "<output>.manifest.json"
std::string manifest_path(const std::string& output);

std::string manifest_json(const RunManifest& manifest);

/// Writes manifest_json next to `output`; returns the manifest path.
std::string write_manifest(const RunManifest& manifest, const std::string& output);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

} // namespace vlcnoma::cli
