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

#include "vlcnoma_cli/plot_script.hpp"

#include <cmath>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace vlcnoma::cli {

namespace {

constexpr const char* kScriptBody = R"PY(
import argparse
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main():
    parser = argparse.ArgumentParser(description="Sum rate against transmit SNR")
    parser.add_argument("--output", default=DEFAULT_IMAGE)
    parser.add_argument("--errorbars", action="store_true", help="draw the CI half-widths")
    args = parser.parse_args()

    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    markers = ["o", "s", "^", "v", "D", "x", "+", "*"]
    for index, curve in enumerate(CURVES):
        points = [p for p in zip(curve["gamma_db"], curve["sum_rate"], curve["ci_halfwidth"])
                  if not math.isnan(p[1])]
        if not points:
            continue
        xs, ys, ci = zip(*points)
        style = "--" if "/oma-" in curve["label"] or curve["label"].startswith("oma-") else "-"
        kwargs = dict(linestyle=style, marker=markers[index % len(markers)], markevery=4,
                      label=curve["label"])
        if args.errorbars:
            ax.errorbar(xs, ys, yerr=ci, capsize=2, **kwargs)
        else:
            ax.plot(xs, ys, **kwargs)
    ax.set_xlabel("Transmit SNR $\\gamma$ (dB)")
    ax.set_ylabel("Sum rate (bit/s/Hz)")
    ax.grid(True, linestyle=":")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)
    print("wrote", args.output)


if __name__ == "__main__":
    main()
)PY";

} // namespace

std::string make_plot_script(const std::vector<PlotInput>& inputs, const std::string& image)
{
    // Labels that appear in several inputs get the file stem as a prefix.
    std::map<std::string, std::set<std::string>> sources_of;
    for (const auto& in : inputs)
        for (const auto& r : in.rows)
            sources_of[r.scheme].insert(in.source);

    std::vector<std::string> order;
    std::map<std::string, nlohmann::json> curves;
    for (const auto& in : inputs) {
        const std::string stem = std::filesystem::path(in.source).stem().string();
        for (const auto& r : in.rows) {
            const std::string label = sources_of[r.scheme].size() > 1 ? stem + ":" + r.scheme : r.scheme;
            auto [it, inserted] = curves.try_emplace(label);
            if (inserted) {
                order.push_back(label);
                it->second = {{"label", label}, {"gamma_db", nlohmann::json::array()},
                              {"sum_rate", nlohmann::json::array()}, {"ci_halfwidth", nlohmann::json::array()}};
            }
            auto num = [](double v) { return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v); };
            it->second["gamma_db"].push_back(r.gamma_db);
            it->second["sum_rate"].push_back(num(r.sum_rate));
            it->second["ci_halfwidth"].push_back(num(r.ci_halfwidth));
        }
    }
    if (order.empty())
        throw CsvError("plot: no curves to draw");

    nlohmann::json data = nlohmann::json::array();
    for (const auto& label : order)
        data.push_back(curves[label]);

    std::ostringstream o;
    o << "#!/usr/bin/env python3\n"
      << "\"\"\"Sum rate against transmit SNR. Generated by vlcnoma plot; the data is embedded.\"\"\"\n"
      << "import json\n\n"
      << "DEFAULT_IMAGE = " << nlohmann::json(image).dump() << "\n"
      // NaN points are stored as null and converted back on load.
      << "CURVES = [\n"
      << "    {k: ([float('nan') if v is None else v for v in vals] if isinstance(vals, list) else vals)\n"
      << "     for k, vals in c.items()}\n"
      << "    for c in json.loads(r'''" << data.dump() << "''')\n"
      << "]\n"
      << kScriptBody;
    return o.str();
}

} // namespace vlcnoma::cli
