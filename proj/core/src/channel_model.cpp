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

#include "vlcnoma/channel_model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "vlcnoma/errors.hpp"
#include "vlcnoma/units.hpp"

namespace vlcnoma {

double lambertian_order(double hpbw)
{
    const double c = std::cos(hpbw);
    if (!(hpbw > 0.0 && hpbw < kPi / 2.0) || c <= 0.0 || c >= 1.0)
        throw DomainError("lambertian_order: half-power beamwidth must lie in (0, pi/2), got " +
                          std::to_string(hpbw));
    return -1.0 / std::log2(c);
}

LedGeometry LedGeometry::make(double ell, double hpbw, double detector_area, double half_fov)
{
    if (!(ell > 0.0))
        throw DomainError("LedGeometry: ell must be positive");
    if (!(detector_area > 0.0))
        throw DomainError("LedGeometry: detector area must be positive");
    if (!(half_fov > 0.0 && half_fov <= kPi / 2.0))
        throw DomainError("LedGeometry: half FOV must lie in (0, pi/2]");
    return LedGeometry{ell, hpbw, vlcnoma::lambertian_order(hpbw), detector_area, half_fov};
}

double LedGeometry::peak_gain() const noexcept
{
    return (lambertian_order + 1.0) * detector_area / (2.0 * kPi * ell * ell);
}

PathGainProfile::PathGainProfile(const LedGeometry& geom)
    : PathGainProfile(geom.ell,
                      (geom.lambertian_order + 1.0) * geom.detector_area *
                          std::pow(geom.ell, geom.lambertian_order) / (2.0 * kPi),
                      (geom.lambertian_order + 2.0) / 2.0)
{
}

PathGainProfile::PathGainProfile(double ell, double channel_constant, double exponent)
    : ell_(ell), channel_constant_(channel_constant), exponent_(exponent)
{
}

double PathGainProfile::gain_factor(double d) const noexcept
{
    return channel_constant_ / std::pow(ell_ * ell_ + d * d, exponent_);
}

double PathGainProfile::upsilon(double d) const noexcept
{
    const double g = gain_factor(d);
    return 1.0 / (g * g);
}

double PathGainProfile::distance_at_squared_gain(double x, double scale) const noexcept
{
    if (x <= 0.0)
        return std::numeric_limits<double>::infinity();
    // scale * c^2 / (ell^2 + r^2)^(2e) = x
    const double r2 = std::pow(scale * channel_constant_ * channel_constant_ / x,
                               1.0 / (2.0 * exponent_)) -
                      ell_ * ell_;
    return r2 > 0.0 ? std::sqrt(r2) : 0.0;
}

double incidence_angle(double d, double phi, double ell) noexcept
{
    // atan2(ell, 0) == pi/2 covers the receiver directly below the LED.
    return kPi - std::atan2(ell, d) - phi;
}

double irradiance_cosine(double d, double ell) noexcept
{
    return ell / std::sqrt(ell * ell + d * d);
}

double channel_gain(const LedGeometry& geom, const ReceiverState& state) noexcept
{
    const double theta = incidence_angle(state.d, state.phi, geom.ell);
    if (!inside_fov(theta, geom.half_fov))
        return 0.0;
    const double r2 = geom.ell * geom.ell + state.d * state.d;
    return (geom.lambertian_order + 1.0) * geom.detector_area / (2.0 * kPi * r2) *
           std::pow(irradiance_cosine(state.d, geom.ell), geom.lambertian_order) * std::cos(theta);
}

double mean_channel_gain(const LedGeometry& geom, double d, double mean_phi) noexcept
{
    const double mean_theta = incidence_angle(d, mean_phi, geom.ell);
    if (!inside_fov(mean_theta, geom.half_fov))
        return 0.0;
    const double r2 = geom.ell * geom.ell + d * d;
    return (geom.lambertian_order + 1.0) * geom.detector_area / (2.0 * kPi * r2) *
           std::pow(irradiance_cosine(d, geom.ell), geom.lambertian_order) *
           std::abs(std::cos(std::atan2(geom.ell, d) + mean_phi));
}

} // namespace vlcnoma
