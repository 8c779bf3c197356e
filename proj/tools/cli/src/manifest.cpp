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

#include "vlcnoma_cli/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "vlcnoma/errors.hpp"
#include "vlcnoma/version.hpp"

namespace vlcnoma::cli {

std::string manifest_path(const std::string& output) { return output + ".manifest.json"; }

std::string manifest_json(const RunManifest& m)
{
    const EngineVersions v = engine_versions();
    const nlohmann::ordered_json j{
        {"command", m.command},
        {"run", m.run_name},
        {"config",
         {{"source", m.source_kind}, {"name", m.source_name}, {"text", m.source_text}, {"overrides", m.overrides},
          {"resolved", m.resolved_config}}},
        {"root_seed", m.root_seed},
        {"quick", m.quick},
        {"engines", {{"vlcnoma", v.library}, {"gsl", v.gsl}, {"boost", v.boost}, {"compiler", v.compiler}}},
        {"timing", {{"started_utc", m.started_utc}, {"elapsed_seconds", m.elapsed_seconds}}},
        {"outputs", m.outputs},
    };
    return j.dump(2) + "\n";
}

std::string write_manifest(const RunManifest& manifest, const std::string& output)
{
    const std::string path = manifest_path(output);
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write manifest '" + path + "'");
    out << manifest_json(manifest);
    return path;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace vlcnoma::cli
