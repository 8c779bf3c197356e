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

#include "vlcnoma/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "vlcnoma/errors.hpp"
#include "vlcnoma/units.hpp"

namespace vlcnoma {

namespace {

namespace pt = boost::property_tree;

using KeyMap = std::map<std::string, std::string>;

constexpr std::string_view kSeriesPrefix = "series.";

// Every recognised key with its default value; missing keys fall back to these.
const KeyMap& defaults()
{
    static const KeyMap d{
        {"geometry.led_height", "2"},
        {"geometry.hpbw_deg", "60"},
        {"geometry.detector_area", "1e-4"},
        {"geometry.half_fov_deg", "50"},
        {"mobility.num_users", "20"},
        {"mobility.d_min", "0"},
        {"mobility.d_max", "10"},
        {"mobility.delta_phi_deg", "0"},
        {"mobility.mean_phi_min_deg", ""}, // empty: delta_phi
        {"mobility.mean_phi_max_deg", ""}, // empty: 180 - delta_phi
        {"noma.share_weak", "0.984375"},
        {"noma.share_strong", "0.015625"},
        {"noma.power_interpretation", "power"},
        {"noma.rate_weak", "2"},
        {"noma.rate_strong", "10"},
        {"noma.oma_model", "time-shared"},
        {"scheduling.schemes", "full-csi"},
        {"scheduling.rank_weak", "1"},
        {"scheduling.rank_strong", "10"},
        {"scheduling.empty_group", "condition"},
        {"scheduling.d_threshold_coeff", "0.1"},
        {"scheduling.theta_threshold_coeff", "0.1"},
        {"scheduling.d_threshold", ""},        // empty: coeff * d_max
        {"scheduling.theta_threshold_deg", ""}, // empty: coeff * half_fov
        {"sweep.gamma_db", "120:5:280"},
        {"sweep.trials", "100000"},
        {"sweep.seed", "1"},
        {"sweep.include_oma", "true"},
        {"sweep.workers", "0"},
        {"noise.enabled", "false"},
        {"noise.sigma_d", "0.05"},
        {"noise.sigma_phi_deg", "2.5"},
        {"quadrature.abs_tol", "1e-10"},
        {"quadrature.rel_tol", "1e-8"},
        {"quadrature.max_subdivisions", "2000"},
    };
    return d;
}

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// Drops a trailing "; ..." or "# ..." comment; the marker must follow whitespace.
std::string strip_inline_comment(const std::string& value)
{
    for (std::size_t k = 0; k < value.size(); ++k)
        if ((value[k] == ';' || value[k] == '#') && (k == 0 || value[k - 1] == ' ' || value[k - 1] == '\t'))
            return trim(std::string_view(value).substr(0, k));
    return value;
}

void check_known(const std::string& key)
{
    if (!defaults().contains(key))
        throw ConfigError(key, "unknown configuration key");
}

double to_double(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v))
        throw ConfigError(key, "expected a number, got '" + text + "'");
    return v;
}

template <class Int>
Int to_integer(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        throw ConfigError(key, "expected an integer, got '" + text + "'");
    return v;
}

bool to_bool(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    if (t == "true" || t == "yes" || t == "on" || t == "1")
        return true;
    if (t == "false" || t == "no" || t == "off" || t == "0")
        return false;
    throw ConfigError(key, "expected true or false, got '" + text + "'");
}

std::vector<std::string> split_list(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        const std::string item = trim(text.substr(start, end - start));
        if (!item.empty())
            out.push_back(item);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

// "section.key=value" -> (key, value)
std::pair<std::string, std::string> split_override(const std::string& item)
{
    const auto eq = item.find('=');
    if (eq == std::string::npos)
        throw ConfigError(item, "override must have the form section.key=value");
    return {trim(std::string_view(item).substr(0, eq)), trim(std::string_view(item).substr(eq + 1))};
}

class Resolver {
public:
    explicit Resolver(const KeyMap& values) : values_(values) {}

    const std::string& raw(const std::string& key) const
    {
        const auto it = values_.find(key);
        return it != values_.end() ? it->second : defaults().at(key);
    }
    bool is_set(const std::string& key) const { return !trim(raw(key)).empty(); }
    double number(const std::string& key) const { return to_double(key, raw(key)); }
    double angle(const std::string& key) const { return deg_to_rad(number(key)); }
    template <class Int>
    Int integer(const std::string& key) const
    {
        return to_integer<Int>(key, raw(key));
    }
    bool flag(const std::string& key) const { return to_bool(key, raw(key)); }

private:
    const KeyMap& values_;
};

template <class Fn>
auto with_field(const char* field, Fn&& fn)
{
    try {
        return fn();
    } catch (const DomainError& e) {
        throw ConfigError(field, e.what());
    } catch (const InfeasibleAllocation& e) {
        throw ConfigError(field, e.what());
    }
}

ExperimentConfig build_series(const std::string& label, const KeyMap& values)
{
    const Resolver r(values);
    ExperimentConfig c;
    c.label = label;

    c.geom = with_field("geometry", [&] {
        return LedGeometry::make(r.number("geometry.led_height"), r.angle("geometry.hpbw_deg"),
                                 r.number("geometry.detector_area"), r.angle("geometry.half_fov_deg"));
    });

    auto& m = c.mobility;
    m.num_users = r.integer<int>("mobility.num_users");
    m.d_min = r.number("mobility.d_min");
    m.d_max = r.number("mobility.d_max");
    const double dphi_deg = r.number("mobility.delta_phi_deg");
    m.delta_phi = deg_to_rad(dphi_deg);
    m.mean_phi_min = r.is_set("mobility.mean_phi_min_deg") ? r.angle("mobility.mean_phi_min_deg")
                                                            : deg_to_rad(dphi_deg);
    m.mean_phi_max = r.is_set("mobility.mean_phi_max_deg") ? r.angle("mobility.mean_phi_max_deg")
                                                            : deg_to_rad(180.0 - dphi_deg);
    with_field("mobility", [&] { m.validate(); });

    const std::string interp = trim(r.raw("noma.power_interpretation"));
    PowerInterpretation pi;
    if (interp == "power")
        pi = PowerInterpretation::Power;
    else if (interp == "amplitude")
        pi = PowerInterpretation::Amplitude;
    else
        throw ConfigError("noma.power_interpretation", "expected power or amplitude, got '" + interp + "'");
    const auto alloc = with_field("noma.share_weak", [&] {
        return PowerAllocation::make(r.number("noma.share_weak"), r.number("noma.share_strong"), pi);
    });
    const auto targets = with_field("noma.rate_weak", [&] {
        return TargetRates::make(r.number("noma.rate_weak"), r.number("noma.rate_strong"));
    });
    const std::string oma = trim(r.raw("noma.oma_model"));
    OmaRateModel oma_model;
    if (oma == "time-shared")
        oma_model = OmaRateModel::TimeShared;
    else if (oma == "literal")
        oma_model = OmaRateModel::Literal;
    else
        throw ConfigError("noma.oma_model", "expected time-shared or literal, got '" + oma + "'");
    c.noma = NomaConfig{alloc, targets, oma_model};
    // The weak user's feasibility does not depend on the SNR; reject it at load time.
    with_field("noma.share_weak", [&] { return eta_thresholds(targets, alloc, 1.0); });

    for (const auto& name : split_list(r.raw("scheduling.schemes"))) {
        const auto kind = parse_feedback_kind(name);
        if (!kind)
            throw ConfigError("scheduling.schemes", "unknown scheme '" + name + "'");
        c.schemes.push_back(*kind);
    }
    c.strategy.rank_weak = r.integer<int>("scheduling.rank_weak");
    c.strategy.rank_strong = r.integer<int>("scheduling.rank_strong");
    const std::string empty = trim(r.raw("scheduling.empty_group"));
    if (empty == "condition")
        c.strategy.empty_group = EmptyGroupPolicy::Condition;
    else if (empty == "outage")
        c.strategy.empty_group = EmptyGroupPolicy::Outage;
    else
        throw ConfigError("scheduling.empty_group", "expected condition or outage, got '" + empty + "'");
    if (!c.schemes.empty())
        c.strategy.kind = is_group_kind(c.schemes.front()) ? SchedulingStrategy::Kind::Group
                                                           : SchedulingStrategy::Kind::Individual;
    c.d_threshold = r.is_set("scheduling.d_threshold")
                        ? r.number("scheduling.d_threshold")
                        : r.number("scheduling.d_threshold_coeff") * m.d_max;
    c.theta_threshold = r.is_set("scheduling.theta_threshold_deg")
                            ? r.angle("scheduling.theta_threshold_deg")
                            : deg_to_rad(r.number("scheduling.theta_threshold_coeff") *
                                         r.number("geometry.half_fov_deg"));

    c.gamma_db = with_field("sweep.gamma_db", [&] { return parse_gamma_grid(r.raw("sweep.gamma_db")); });
    const auto trials = r.integer<long long>("sweep.trials");
    if (trials < 1)
        throw ConfigError("sweep.trials", "must be positive");
    c.trials = static_cast<std::uint64_t>(trials);
    c.root_seed = r.integer<std::uint64_t>("sweep.seed");
    c.include_oma = r.flag("sweep.include_oma");
    c.workers = r.integer<unsigned>("sweep.workers");

    if (r.flag("noise.enabled"))
        c.noise = NoiseConfig{r.number("noise.sigma_d"), r.angle("noise.sigma_phi_deg")};

    c.quad.abs_tol = r.number("quadrature.abs_tol");
    c.quad.rel_tol = r.number("quadrature.rel_tol");
    c.quad.max_subdivisions = r.integer<std::size_t>("quadrature.max_subdivisions");

    c.validate();
    return c;
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Degree text that parses back to exactly `rad`. Every angle is converted from a degree value,
// so one of the neighbours of rad_to_deg(rad) maps back onto it.
std::string fmt_deg(double rad)
{
    const double deg = rad_to_deg(rad);
    double up = deg;
    double down = deg;
    for (int step = 0; step < 16; ++step) {
        if (deg_to_rad(up) == rad)
            return fmt(up);
        if (deg_to_rad(down) == rad)
            return fmt(down);
        up = std::nextafter(up, HUGE_VAL);
        down = std::nextafter(down, -HUGE_VAL);
    }
    return fmt(deg);
}

} // namespace

std::vector<double> parse_gamma_grid(std::string_view text)
{
    const std::string t = trim(text);
    std::vector<double> grid;
    if (t.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(t);
        for (std::string p; std::getline(ss, p, ':');)
            parts.push_back(p);
        if (parts.size() != 3)
            throw DomainError("range must have the form start:step:stop");
        const double start = to_double("sweep.gamma_db", parts[0]);
        const double step = to_double("sweep.gamma_db", parts[1]);
        const double stop = to_double("sweep.gamma_db", parts[2]);
        if (!(step > 0.0) || stop < start)
            throw DomainError("range needs step > 0 and stop >= start");
        const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
        for (long k = 0; k <= n; ++k)
            grid.push_back(start + static_cast<double>(k) * step);
        return grid;
    }
    for (const auto& item : split_list(t))
        grid.push_back(to_double("sweep.gamma_db", item));
    return grid;
}

RunConfig parse_config(std::string_view text, std::span<const std::string> overrides, std::string name)
{
    pt::ptree tree;
    try {
        std::istringstream in{std::string(text)};
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError("line " + std::to_string(e.line()), e.message());
    }

    KeyMap base;
    std::vector<std::pair<std::string, KeyMap>> series;
    for (const auto& [section, body] : tree) {
        if (body.empty() && !body.data().empty())
            throw ConfigError(section, "key outside of any section");
        if (section.starts_with(kSeriesPrefix)) {
            KeyMap values;
            for (const auto& [key, v] : body) {
                const std::string full = key;
                check_known(full);
                values[full] = strip_inline_comment(v.data());
            }
            series.emplace_back(section.substr(kSeriesPrefix.size()), std::move(values));
            continue;
        }
        for (const auto& [key, v] : body) {
            const std::string full = section + "." + key;
            check_known(full);
            base[full] = strip_inline_comment(v.data());
        }
    }
    if (series.empty())
        series.emplace_back(name, KeyMap{});

    // Command-line overrides win over the file.
    for (const auto& item : overrides) {
        auto [key, value] = split_override(item);
        if (key.starts_with(kSeriesPrefix)) {
            const std::string rest = key.substr(kSeriesPrefix.size());
            const auto dot = rest.find('.');
            const std::string sname = rest.substr(0, dot);
            const std::string skey = dot == std::string::npos ? "" : rest.substr(dot + 1);
            check_known(skey);
            auto it = std::find_if(series.begin(), series.end(), [&](const auto& s) { return s.first == sname; });
            if (it == series.end())
                throw ConfigError(key, "no series named '" + sname + "'");
            it->second[skey] = value;
            continue;
        }
        check_known(key);
        base[key] = value;
        for (auto& s : series)
            s.second.erase(key);
    }

    RunConfig run;
    run.name = std::move(name);
    for (const auto& [label, values] : series) {
        KeyMap merged = base;
        for (const auto& [k, v] : values)
            merged[k] = v;
        run.series.push_back(build_series(label, merged));
    }
    return run;
}

RunConfig load_config_file(const std::string& path, std::span<const std::string> overrides)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), overrides, std::filesystem::path(path).stem().string());
}

RunConfig load_preset(std::string_view name, std::span<const std::string> overrides)
{
    return parse_config(preset_text(name), overrides, std::string(name));
}

std::string render_config(const ExperimentConfig& c)
{
    std::ostringstream o;
    o << "[geometry]\n"
      << "led_height = " << fmt(c.geom.ell) << "\n"
      << "hpbw_deg = " << fmt_deg(c.geom.hpbw) << "\n"
      << "detector_area = " << fmt(c.geom.detector_area) << "\n"
      << "half_fov_deg = " << fmt_deg(c.geom.half_fov) << "\n\n";
    o << "[mobility]\n"
      << "num_users = " << c.mobility.num_users << "\n"
      << "d_min = " << fmt(c.mobility.d_min) << "\n"
      << "d_max = " << fmt(c.mobility.d_max) << "\n"
      << "delta_phi_deg = " << fmt_deg(c.mobility.delta_phi) << "\n"
      << "mean_phi_min_deg = " << fmt_deg(c.mobility.mean_phi_min) << "\n"
      << "mean_phi_max_deg = " << fmt_deg(c.mobility.mean_phi_max) << "\n\n";
    o << "[noma]\n"
      << "share_weak = " << fmt(c.noma.alloc.share_weak) << "\n"
      << "share_strong = " << fmt(c.noma.alloc.share_strong) << "\n"
      << "power_interpretation = power\n"
      << "rate_weak = " << fmt(c.noma.targets.rate_weak) << "\n"
      << "rate_strong = " << fmt(c.noma.targets.rate_strong) << "\n"
      << "oma_model = " << (c.noma.oma_model == OmaRateModel::TimeShared ? "time-shared" : "literal")
      << "\n\n";
    o << "[scheduling]\nschemes = ";
    for (std::size_t s = 0; s < c.schemes.size(); ++s)
        o << (s ? ", " : "") << to_string(c.schemes[s]);
    o << "\n"
      << "rank_weak = " << c.strategy.rank_weak << "\n"
      << "rank_strong = " << c.strategy.rank_strong << "\n"
      << "empty_group = " << (c.strategy.empty_group == EmptyGroupPolicy::Condition ? "condition" : "outage")
      << "\n"
      << "d_threshold = " << fmt(c.d_threshold) << "\n"
      << "theta_threshold_deg = " << fmt_deg(c.theta_threshold) << "\n\n";
    o << "[sweep]\ngamma_db = ";
    for (std::size_t g = 0; g < c.gamma_db.size(); ++g)
        o << (g ? ", " : "") << fmt(c.gamma_db[g]);
    o << "\n"
      << "trials = " << c.trials << "\n"
      << "seed = " << c.root_seed << "\n"
      << "include_oma = " << (c.include_oma ? "true" : "false") << "\n"
      << "workers = " << c.workers << "\n\n";
    o << "[noise]\n"
      << "enabled = " << (c.noise ? "true" : "false") << "\n";
    if (c.noise)
        o << "sigma_d = " << fmt(c.noise->sigma_d) << "\n"
          << "sigma_phi_deg = " << fmt_deg(c.noise->sigma_phi) << "\n";
    o << "\n[quadrature]\n"
      << "abs_tol = " << fmt(c.quad.abs_tol) << "\n"
      << "rel_tol = " << fmt(c.quad.rel_tol) << "\n"
      << "max_subdivisions = " << c.quad.max_subdivisions << "\n";
    return o.str();
}

std::string render_run_config(const RunConfig& run)
{
    std::ostringstream o;
    for (std::size_t s = 0; s < run.series.size(); ++s) {
        o << (s ? "\n" : "") << "[series." << run.series[s].label << "]\n";
        std::istringstream in(render_config(run.series[s]));
        std::string section;
        for (std::string line; std::getline(in, line);) {
            if (line.empty())
                continue;
            if (line.front() == '[')
                section = line.substr(1, line.size() - 2);
            else
                o << section << "." << line << "\n";
        }
    }
    return o.str();
}

} // namespace vlcnoma
