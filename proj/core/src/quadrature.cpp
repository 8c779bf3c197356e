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

#include "vlcnoma/quadrature.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "vlcnoma/errors.hpp"

namespace vlcnoma {

void QuadratureConfig::validate() const
{
    if (!(abs_tol > 0.0 && rel_tol > 0.0))
        throw DomainError("QuadratureConfig: tolerances must be positive");
    if (max_subdivisions < 8)
        throw DomainError("QuadratureConfig: max_subdivisions must be at least 8");
}

namespace detail {

namespace {

struct WorkspaceDeleter {
    void operator()(gsl_integration_workspace* w) const noexcept { gsl_integration_workspace_free(w); }
};

void disable_gsl_abort() noexcept
{
    // GSL's default handler aborts; errors are reported through status codes instead.
    static const bool once = [] {
        gsl_set_error_handler_off();
        return true;
    }();
    (void)once;
}

} // namespace

Estimate integrate_impl(IntegrandThunk fn, void* ctx, double a, double b,
                        std::span<const double> breakpoints, const QuadratureConfig& cfg)
{
    if (!(b > a))
        return {};
    disable_gsl_abort();

    std::vector<double> points{a};
    for (double p : breakpoints)
        if (p > a && p < b)
            points.push_back(p);
    points.push_back(b);
    std::sort(points.begin(), points.end());
    // Near-coincident points (the same kink reached by two routes) would leave a sliver interval
    // that the adaptive rule reports as a singularity; merge them.
    const double min_gap = 1e-10 * (b - a);
    points.erase(std::unique(points.begin(), points.end(),
                             [min_gap](double u, double v) { return v - u <= min_gap; }),
                 points.end());
    points.back() = b;

    std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
        gsl_integration_workspace_alloc(cfg.max_subdivisions));
    gsl_function gf{fn, ctx};
    double value = 0.0;
    double abs_error = 0.0;
    int status = 0;
    if (points.size() > 2) {
        status = gsl_integration_qagp(&gf, points.data(), points.size(), cfg.abs_tol, cfg.rel_tol,
                                      cfg.max_subdivisions, ws.get(), &value, &abs_error);
    } else {
        status = gsl_integration_qags(&gf, a, b, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions,
                                      ws.get(), &value, &abs_error);
    }
    if (status != GSL_SUCCESS) {
        // Roundoff-limited results are accepted when the estimate still meets tolerance.
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
        if (!(status == GSL_EROUND && abs_error <= target))
            throw QuadratureError(std::string("quadrature failed on [") + std::to_string(a) +
                                      ", " + std::to_string(b) + "]: " + gsl_strerror(status),
                                  value, abs_error);
    }
    return {value, abs_error};
}

} // namespace detail

} // namespace vlcnoma
