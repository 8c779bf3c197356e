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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vlcnoma/config.hpp"
#include "vlcnoma_cli/manifest.hpp"

namespace vlcnoma::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,            // bad arguments or configuration
    kExitValidationFailed = 2, // at least one validation check failed
    kExitNumerical = 3,        // a numerical procedure failed
};

struct RunOptions {
    std::string config_path;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<unsigned> workers;
    std::string out;
    bool quick = false;
    std::vector<std::string> sets; // "section.key=value"
    // validate only
    double tolerance_scale = 1.0;
    std::optional<std::uint64_t> samples;
};

/// Trial count used by `simulate --quick` unless --trials is given.
inline constexpr std::uint64_t kQuickTrials = 10'000;

struct LoadedRun {
    RunConfig run;
    RunManifest manifest; // source, overrides and resolved config filled in
};

/// Resolves --config/--preset plus overrides (flags become "section.key=value" overrides
/// applied after --set). Throws ConfigError.
LoadedRun load_run(const RunOptions& options, std::string_view command);

int cmd_simulate(const RunOptions& options, std::ostream& out, std::ostream& err);
int cmd_analytic(const RunOptions& options, std::ostream& out, std::ostream& err);
int cmd_validate(const RunOptions& options, std::ostream& out, std::ostream& err);
int cmd_plot(const std::vector<std::string>& csv_paths, const std::string& script_path, std::ostream& out,
             std::ostream& err);

/// Parses the command line and dispatches; maps errors to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace vlcnoma::cli
