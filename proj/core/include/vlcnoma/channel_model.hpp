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

// Line-of-sight DC channel of a single downward-facing LED and a tilted photodetector.
//
// Geometry: the LED sits `ell` metres above the user plane and points straight down, so
// the irradiance cosine of a user at horizontal distance d is ell / sqrt(ell^2 + d^2).
// The signed incidence angle is theta = pi - atan(ell / d) - phi, where phi is the
// receiver's vertical orientation; the detector only collects light for |theta| <= Theta.
//
// All angles are radians.

namespace vlcnoma {

struct LedGeometry {
    double ell;              // LED height above the user plane [m]
    double hpbw;             // half-power beamwidth [rad]
    double lambertian_order; // m, derived from hpbw
    double detector_area;    // A_r [m^2]
    double half_fov;         // Theta [rad]

    /// Validates every field and derives the Lambertian order. Throws DomainError.
    static LedGeometry make(double ell, double hpbw, double detector_area, double half_fov);

    /// Upper bound of the DC gain, reached at d = 0, theta = 0.
    double peak_gain() const noexcept;
};

struct ReceiverState {
    double d;        // horizontal distance to the LED [m]
    double mean_phi; // mean vertical angle
    double phi;      // instantaneous vertical angle
};

/// Inside the field of view the gain factorises as h = g(d) * cos(theta) with
/// g(d) = c / (ell^2 + d^2)^exponent, c = (m + 1) A_r ell^m / (2 pi), exponent = (m + 2) / 2.
/// The analytic engine works with squared gains through upsilon(d) = 1 / g(d)^2, so that
/// h^2 * upsilon(d) = cos^2(theta).
class PathGainProfile {
public:
    explicit PathGainProfile(const LedGeometry& geom);
    PathGainProfile(double ell, double channel_constant, double exponent);

    double ell() const noexcept { return ell_; }
    double channel_constant() const noexcept { return channel_constant_; }
    double exponent() const noexcept { return exponent_; }

    double gain_factor(double d) const noexcept;
    double upsilon(double d) const noexcept;

    /// Distance r >= 0 at which scale * g(r)^2 == x; +inf for x == 0 and 0 when
    /// scale * g(0)^2 <= x. Nonincreasing in x.
    double distance_at_squared_gain(double x, double scale = 1.0) const noexcept;

private:
    double ell_;
    double channel_constant_;
    double exponent_;
};

/// m = -1 / log2(cos(hpbw)). Throws DomainError unless 0 < hpbw < pi/2.
double lambertian_order(double hpbw);

/// Signed incidence angle; atan(ell / 0) is taken as pi/2.
double incidence_angle(double d, double phi, double ell) noexcept;

double irradiance_cosine(double d, double ell) noexcept;

inline bool inside_fov(double theta, double half_fov) noexcept
{
    return (theta < 0 ? -theta : theta) <= half_fov;
}

/// Instantaneous DC gain; exactly 0 outside the field of view.
double channel_gain(const LedGeometry& geom, const ReceiverState& state) noexcept;

/// Average DC gain evaluated on the mean vertical angle, with the FOV gate applied to
/// the mean incidence angle.
double mean_channel_gain(const LedGeometry& geom, double d, double mean_phi) noexcept;

} // namespace vlcnoma
