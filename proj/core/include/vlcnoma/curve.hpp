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

#include <string>
#include <vector>

namespace vlcnoma {

/// One SNR sample of a sum-rate curve. Monte Carlo fills ci_halfwidth with the 95% normal
/// interval; the analytic engine stores its quadrature error estimate there.
struct CurvePoint {
    double gamma_db = 0.0;
    double sum_rate = 0.0;
    double ci_halfwidth = 0.0;
    double outage_weak = 0.0;
    double outage_strong = 0.0;
    double conditioning_rate = 1.0;
    bool flagged = false; // numerical failure; values are NaN
};

struct Curve {
    std::string label;
    std::vector<CurvePoint> points;
};

} // namespace vlcnoma
