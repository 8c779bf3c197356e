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

// Sum-rate curve tables: one row per (curve, SNR) point.

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vlcnoma/curve.hpp"
#include "vlcnoma/errors.hpp"

namespace vlcnoma::cli {

inline constexpr std::array<std::string_view, 7> kCsvColumns{
    "scheme", "gamma_db", "sum_rate", "ci_halfwidth", "outage_weak", "outage_strong", "conditioning_rate"};

struct CsvRow {
    std::string scheme; // "<series>/<curve>"
    double gamma_db = 0.0;
    double sum_rate = 0.0;
    double ci_halfwidth = 0.0;
    double outage_weak = 0.0;
    double outage_strong = 0.0;
    double conditioning_rate = 0.0;
};

/// Malformed or non-conforming table.
class CsvError : public Error {
public:
    using Error::Error;
};

/// Rows of `curves`, labelled "<series>/<curve label>".
std::vector<CsvRow> rows_from_curves(std::string_view series, const std::vector<Curve>& curves);

/// Header plus one line per row; numbers use up to 10 significant digits.
void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);

/// Throws CsvError naming the offending column for a schema mismatch, and for an empty table.
std::vector<CsvRow> read_csv(std::istream& in, const std::string& source = "input");
std::vector<CsvRow> read_csv_file(const std::string& path);

} // namespace vlcnoma::cli
