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

#include "vlcnoma_cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace vlcnoma::cli {

namespace {

std::string number(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');)
        fields.push_back(f);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

double parse_number(const std::string& text, std::string_view column, const std::string& where)
{
    if (text == "nan")
        return std::nan("");
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw CsvError(where + ": column '" + std::string(column) + "' holds '" + text + "', not a number");
    return v;
}

} // namespace

std::vector<CsvRow> rows_from_curves(std::string_view series, const std::vector<Curve>& curves)
{
    std::vector<CsvRow> rows;
    for (const auto& c : curves)
        for (const auto& p : c.points)
            rows.push_back(CsvRow{std::string(series) + "/" + c.label, p.gamma_db, p.sum_rate, p.ci_halfwidth,
                                  p.outage_weak, p.outage_strong, p.conditioning_rate});
    return rows;
}

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows)
{
    for (std::size_t c = 0; c < kCsvColumns.size(); ++c)
        out << (c ? "," : "") << kCsvColumns[c];
    out << "\n";
    for (const auto& r : rows)
        out << r.scheme << "," << number(r.gamma_db) << "," << number(r.sum_rate) << ","
            << number(r.ci_halfwidth) << "," << number(r.outage_weak) << "," << number(r.outage_strong)
            << "," << number(r.conditioning_rate) << "\n";
}

std::vector<CsvRow> read_csv(std::istream& in, const std::string& source)
{
    std::string line;
    if (!std::getline(in, line) || line.empty())
        throw CsvError(source + ": empty file (expected a header row)");
    if (line.back() == '\r')
        line.pop_back();
    const auto header = split_fields(line);
    for (std::size_t c = 0; c < std::max(header.size(), kCsvColumns.size()); ++c) {
        if (c >= header.size())
            throw CsvError(source + ": missing column '" + std::string(kCsvColumns[c]) + "'");
        if (c >= kCsvColumns.size())
            throw CsvError(source + ": unexpected column '" + header[c] + "'");
        if (header[c] != kCsvColumns[c])
            throw CsvError(source + ": column " + std::to_string(c + 1) + " is '" + header[c] + "', expected '" +
                           std::string(kCsvColumns[c]) + "'");
    }

    std::vector<CsvRow> rows;
    for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto f = split_fields(line);
        const std::string where = source + ":" + std::to_string(lineno);
        if (f.size() != kCsvColumns.size())
            throw CsvError(where + ": expected " + std::to_string(kCsvColumns.size()) + " fields, found " +
                           std::to_string(f.size()));
        CsvRow r;
        r.scheme = f[0];
        r.gamma_db = parse_number(f[1], kCsvColumns[1], where);
        r.sum_rate = parse_number(f[2], kCsvColumns[2], where);
        r.ci_halfwidth = parse_number(f[3], kCsvColumns[3], where);
        r.outage_weak = parse_number(f[4], kCsvColumns[4], where);
        r.outage_strong = parse_number(f[5], kCsvColumns[5], where);
        r.conditioning_rate = parse_number(f[6], kCsvColumns[6], where);
        rows.push_back(std::move(r));
    }
    if (rows.empty())
        throw CsvError(source + ": no data rows");
    return rows;
}

std::vector<CsvRow> read_csv_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CsvError("cannot open '" + path + "'");
    return read_csv(in, path);
}

} // namespace vlcnoma::cli
