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

#include "vlcnoma_cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vlcnoma/analytic.hpp"
#include "vlcnoma/errors.hpp"
#include "vlcnoma/experiment.hpp"
#include "vlcnoma/validation.hpp"
#include "vlcnoma/version.hpp"
#include "vlcnoma_cli/csv.hpp"
#include "vlcnoma_cli/plot_script.hpp"

namespace vlcnoma::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string default_output(const LoadedRun& loaded, std::string_view command, std::string_view ext)
{
    return loaded.run.name + "-" + std::string(command) + std::string(ext);
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << text;
}

std::string csv_text(const std::vector<CsvRow>& rows)
{
    std::ostringstream o;
    write_csv(o, rows);
    return o.str();
}

SchedulingStrategy strategy_for(const ExperimentConfig& series, FeedbackKind kind)
{
    SchedulingStrategy s = series.strategy;
    s.kind = is_group_kind(kind) ? SchedulingStrategy::Kind::Group : SchedulingStrategy::Kind::Individual;
    return s;
}

} // namespace

LoadedRun load_run(const RunOptions& options, std::string_view command)
{
    if (options.config_path.empty() == options.preset.empty())
        throw ConfigError("config", "give exactly one of --config or --preset");

    LoadedRun loaded;
    auto& m = loaded.manifest;
    m.command = std::string(command);
    m.quick = options.quick;
    m.overrides = options.sets;
    if (options.seed)
        m.overrides.push_back("sweep.seed=" + std::to_string(*options.seed));
    if (options.trials)
        m.overrides.push_back("sweep.trials=" + std::to_string(*options.trials));
    else if (options.quick && command == "simulate")
        m.overrides.push_back("sweep.trials=" + std::to_string(kQuickTrials));
    if (options.workers)
        m.overrides.push_back("sweep.workers=" + std::to_string(*options.workers));

    if (!options.preset.empty()) {
        m.source_kind = "preset";
        m.source_name = options.preset;
        m.source_text = preset_text(options.preset);
        loaded.run = parse_config(m.source_text, m.overrides, options.preset);
    } else {
        m.source_kind = "file";
        m.source_name = options.config_path;
        m.source_text = read_file(options.config_path);
        loaded.run = load_config_file(options.config_path, m.overrides);
    }
    m.run_name = loaded.run.name;
    m.resolved_config = render_run_config(loaded.run);
    m.root_seed = loaded.run.series.front().root_seed;
    m.started_utc = utc_timestamp();
    return loaded;
}

int cmd_simulate(const RunOptions& options, std::ostream& out, std::ostream& err)
{
    (void)err;
    const auto start = Clock::now();
    LoadedRun loaded = load_run(options, "simulate");
    std::vector<CsvRow> rows;
    for (const auto& series : loaded.run.series) {
        const auto curves = run_sweep(series);
        const auto part = rows_from_curves(series.label, curves);
        rows.insert(rows.end(), part.begin(), part.end());
        out << "simulated series '" << series.label << "': " << curves.size() << " curves, "
            << series.trials << " trials\n";
    }
    const std::string path = options.out.empty() ? default_output(loaded, "simulate", ".csv") : options.out;
    write_text(path, csv_text(rows));
    loaded.manifest.outputs = {path};
    loaded.manifest.elapsed_seconds = seconds_since(start);
    const std::string mpath = write_manifest(loaded.manifest, path);
    out << "wrote " << path << " and " << mpath << "\n";
    return kExitOk;
}

int cmd_analytic(const RunOptions& options, std::ostream& out, std::ostream& err)
{
    const auto start = Clock::now();
    LoadedRun loaded = load_run(options, "analytic");
    std::vector<CsvRow> rows;
    bool flagged = false;
    for (const auto& series : loaded.run.series) {
        for (FeedbackKind kind : series.schemes) {
            if (!has_analytic_form(kind)) {
                err << "warning: series '" << series.label << "': scheme " << to_string(kind)
                    << " has no closed-form outage expression; skipped\n";
                continue;
            }
            const AnalyticModel model(series.geom, series.mobility, series.scheme(kind), series.quad);
            auto curves = analytic_sum_rate_sweep(model, series.noma, series.gamma_db, strategy_for(series, kind));
            if (!series.include_oma)
                curves.pop_back();
            for (const auto& c : curves)
                for (const auto& p : c.points)
                    if (p.flagged) {
                        flagged = true;
                        err << "warning: series '" << series.label << "', " << c.label << " at " << p.gamma_db
                            << " dB: quadrature did not converge; row flagged with nan\n";
                    }
            const auto part = rows_from_curves(series.label, curves);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    }
    if (rows.empty()) {
        err << "error: no configured scheme has a closed-form outage expression\n";
        return kExitUsage;
    }
    const std::string path = options.out.empty() ? default_output(loaded, "analytic", ".csv") : options.out;
    write_text(path, csv_text(rows));
    loaded.manifest.outputs = {path};
    loaded.manifest.elapsed_seconds = seconds_since(start);
    const std::string mpath = write_manifest(loaded.manifest, path);
    out << "wrote " << path << " and " << mpath << "\n";
    return flagged ? kExitNumerical : kExitOk;
}

int cmd_validate(const RunOptions& options, std::ostream& out, std::ostream& err)
{
    (void)err;
    const auto start = Clock::now();
    LoadedRun loaded = load_run(options, "validate");
    ValidationOptions vopt = options.quick ? ValidationOptions::quick() : ValidationOptions{};
    vopt.tolerance_scale *= options.tolerance_scale;
    if (options.seed)
        vopt.seed = *options.seed;
    if (options.samples)
        vopt.samples = *options.samples;
    if (options.trials)
        vopt.sweep_trials = *options.trials;
    if (options.workers)
        vopt.workers = *options.workers;

    nlohmann::ordered_json report{{"run", loaded.run.name}, {"series", nlohmann::json::array()}};
    bool all_passed = true;
    for (const auto& series : loaded.run.series) {
        const ValidationReport r = validate(series, vopt);
        all_passed = all_passed && r.passed();
        out << "series '" << series.label << "'\n";
        nlohmann::ordered_json checks = nlohmann::json::array();
        for (const auto& c : r.checks) {
            char line[512];
            std::snprintf(line, sizeof line, "  %-4s %-38s measured %-12.6g tolerance %-12.6g %s\n",
                          c.passed ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.tolerance, c.detail.c_str());
            out << line;
            checks.push_back({{"name", c.name},
                              {"passed", c.passed},
                              {"measured", std::isfinite(c.measured) ? nlohmann::json(c.measured) : nlohmann::json(nullptr)},
                              {"tolerance", c.tolerance},
                              {"detail", c.detail}});
        }
        report["series"].push_back({{"label", series.label}, {"passed", r.passed()}, {"checks", checks}});
    }
    report["passed"] = all_passed;
    out << (all_passed ? "all checks passed\n" : "some checks FAILED\n");

    const std::string path = options.out.empty() ? default_output(loaded, "validate", ".json") : options.out;
    write_text(path, report.dump(2) + "\n");
    loaded.manifest.outputs = {path};
    loaded.manifest.elapsed_seconds = seconds_since(start);
    const std::string mpath = write_manifest(loaded.manifest, path);
    out << "wrote " << path << " and " << mpath << "\n";
    return all_passed ? kExitOk : kExitValidationFailed;
}

int cmd_plot(const std::vector<std::string>& csv_paths, const std::string& script_path, std::ostream& out,
             std::ostream& err)
{
    (void)err;
    const auto start = Clock::now();
    std::vector<PlotInput> inputs;
    for (const auto& p : csv_paths)
        inputs.push_back(PlotInput{p, read_csv_file(p)});
    const std::string path = script_path.empty() ? "sumrate_plot.py" : script_path;
    const std::string image = std::filesystem::path(path).replace_extension(".png").string();
    write_text(path, make_plot_script(inputs, image));

    RunManifest m;
    m.command = "plot";
    m.run_name = std::filesystem::path(path).stem().string();
    m.source_kind = "csv";
    for (const auto& p : csv_paths)
        m.source_name += (m.source_name.empty() ? "" : ",") + p;
    m.outputs = {path};
    m.started_utc = utc_timestamp();
    m.elapsed_seconds = seconds_since(start);
    const std::string mpath = write_manifest(m, path);
    out << "wrote " << path << " and " << mpath << " (run it with python3 to render " << image << ")\n";
    return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Downlink NOMA for mobile VLC users: Monte Carlo and closed-form sum rates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", engine_versions().library);

    RunOptions opt;
    std::vector<std::string> csv_paths;
    std::string plot_out;
    const auto presets = preset_names();

    auto add_common = [&](CLI::App* sub) {
        auto* cfg = sub->add_option("--config", opt.config_path, "INI configuration file")->check(CLI::ExistingFile);
        auto* pre = sub->add_option("--preset", opt.preset, "bundled configuration")
                        ->check(CLI::IsMember(std::vector<std::string>(presets.begin(), presets.end())));
        cfg->excludes(pre);
        sub->add_option("--seed", opt.seed, "root seed of the random streams");
        sub->add_option("--trials", opt.trials, "Monte Carlo trials per series")->check(CLI::PositiveNumber);
        sub->add_option("--workers", opt.workers, "worker threads (0: one per core)");
        sub->add_option("--out", opt.out, "output path");
        sub->add_flag("--quick", opt.quick, "reduced sample counts");
        sub->add_option("--set", opt.sets, "override a value: section.key=value")->take_all();
    };

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo sum-rate sweep to CSV");
    add_common(simulate);
    auto* analytic = app.add_subcommand("analytic", "closed-form sum-rate sweep to CSV");
    add_common(analytic);
    auto* validate_cmd = app.add_subcommand("validate", "compare the closed forms against Monte Carlo");
    add_common(validate_cmd);
    validate_cmd->add_option("--tolerance-scale", opt.tolerance_scale, "multiply every tolerance")
        ->check(CLI::PositiveNumber);
    validate_cmd->add_option("--samples", opt.samples, "samples per CDF check")->check(CLI::PositiveNumber);
    auto* plot = app.add_subcommand("plot", "write a matplotlib script for CSV outputs");
    plot->add_option("csv", csv_paths, "CSV files from simulate or analytic")->required();
    plot->add_option("--out", plot_out, "script path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed())
            return cmd_simulate(opt, out, err);
        if (analytic->parsed())
            return cmd_analytic(opt, out, err);
        if (validate_cmd->parsed())
            return cmd_validate(opt, out, err);
        return cmd_plot(csv_paths, plot_out, out, err);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InfeasibleAllocation& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CsvError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const QuadratureError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace vlcnoma::cli
