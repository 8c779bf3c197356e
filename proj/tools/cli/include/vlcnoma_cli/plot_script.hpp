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

// Generates a standalone matplotlib script that draws sum rate against transmit SNR for the
// curves of one or more CSV tables. Nothing is rendered in-process.

#include <string>
#include <utility>
#include <vector>

#include "vlcnoma_cli/csv.hpp"

namespace vlcnoma::cli {

struct PlotInput {
    std::string source; // file the rows came from
    std::vector<CsvRow> rows;
};

/// Python source with the data embedded. `image` is the default output path of the figure.
/// Curves keep their CSV labels; labels that occur in more than one input are prefixed with
/// the input's file stem. Throws CsvError when there is nothing to plot.
std::string make_plot_script(const std::vector<PlotInput>& inputs, const std::string& image);

} // namespace vlcnoma::cli
