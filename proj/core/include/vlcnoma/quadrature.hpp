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

#include <cstddef>
#include <exception>
#include <memory>
#include <span>
#include <type_traits>
#include <utility>

namespace vlcnoma {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    std::size_t max_subdivisions = 2000;

    void validate() const;
    /// Both tolerances halved; used for self-consistency checks.
    QuadratureConfig halved() const noexcept { return {abs_tol / 2, rel_tol / 2, max_subdivisions}; }
};

/// A probability or integral value with its absolute error estimate.
struct Estimate {
    double value = 0.0;
    double abs_error = 0.0;
};

namespace detail {
using IntegrandThunk = double (*)(double, void*);
Estimate integrate_impl(IntegrandThunk fn, void* ctx, double a, double b,
                        std::span<const double> breakpoints, const QuadratureConfig& cfg);
} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]. Interior `breakpoints` (values
/// outside (a, b) are ignored) split the range at known kinks before refinement.
/// Returns {0, 0} when b <= a. Throws QuadratureError if the tolerance is not reached.
template <class F>
Estimate integrate(F&& f, double a, double b, std::span<const double> breakpoints,
                   const QuadratureConfig& cfg)
{
    using Fn = std::remove_reference_t<F>;
    // Exceptions must not unwind through the C integrator; park them and rethrow afterwards.
    struct Context {
        Fn* fn;
        std::exception_ptr error;
    } ctx{std::addressof(f), nullptr};
    auto thunk = [](double x, void* p) -> double {
        auto* c = static_cast<Context*>(p);
        if (c->error)
            return 0.0;
        try {
            return (*c->fn)(x);
        } catch (...) {
            c->error = std::current_exception();
            return 0.0;
        }
    };
    Estimate result;
    try {
        result = detail::integrate_impl(thunk, &ctx, a, b, breakpoints, cfg);
    } catch (...) {
        if (!ctx.error)
            throw;
    }
    if (ctx.error)
        std::rethrow_exception(ctx.error);
    return result;
}

template <class F>
Estimate integrate(F&& f, double a, double b, const QuadratureConfig& cfg)
{
    return integrate(std::forward<F>(f), a, b, std::span<const double>{}, cfg);
}

} // namespace vlcnoma
