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

#include <cmath>

#include <gtest/gtest.h>

#include "vlcnoma/channel_model.hpp"
#include "vlcnoma/errors.hpp"
#include "vlcnoma/random.hpp"
#include "vlcnoma/units.hpp"

using namespace vlcnoma;

namespace {

LedGeometry default_geometry()
{
    return LedGeometry::make(2.0, deg_to_rad(60.0), 1e-4, deg_to_rad(50.0));
}

} // namespace

TEST(LambertianOrder, KnownBeamwidths)
{
    EXPECT_NEAR(lambertian_order(deg_to_rad(60.0)), 1.0, 1e-12);
    EXPECT_NEAR(lambertian_order(deg_to_rad(45.0)), 2.0, 1e-12);
    EXPECT_NEAR(lambertian_order(deg_to_rad(30.0)), 4.8188, 1e-4);
}

TEST(LambertianOrder, RejectsBeamwidthOutsideOpenQuarterTurn)
{
    EXPECT_THROW(lambertian_order(0.0), DomainError);
    EXPECT_THROW(lambertian_order(kPi / 2), DomainError);
    EXPECT_THROW(lambertian_order(-0.1), DomainError);
}

TEST(IncidenceAngle, ReceiverBelowLedPointingUp)
{
    EXPECT_NEAR(incidence_angle(0.0, kPi / 2, 2.0), 0.0, 1e-15);
}

TEST(IncidenceAngle, DiagonalReceiver)
{
    EXPECT_NEAR(incidence_angle(2.0, kPi / 2, 2.0), kPi / 4, 1e-15);
}

TEST(IncidenceAngle, FarReceiverFacingHorizon)
{
    EXPECT_NEAR(incidence_angle(1e9, kPi, 2.0), 0.0, 1e-8);
}

TEST(IncidenceAngle, MayBeNegative)
{
    EXPECT_LT(incidence_angle(0.0, kPi * 0.75, 2.0), 0.0);
}

TEST(IrradianceCosine, Examples)
{
    EXPECT_DOUBLE_EQ(irradiance_cosine(0.0, 2.0), 1.0);
    EXPECT_NEAR(irradiance_cosine(2.0, 2.0), 0.70711, 1e-5);
    EXPECT_NEAR(irradiance_cosine(10.0, 2.0), 0.19612, 1e-5);
}

TEST(ChannelGain, PeakUnderLed)
{
    const auto geom = default_geometry();
    const double expected = (geom.lambertian_order + 1) * 1e-4 / (2 * kPi * 4.0);
    EXPECT_NEAR(channel_gain(geom, {0.0, kPi / 2, kPi / 2}), expected, 1e-15);
    EXPECT_NEAR(channel_gain(geom, {0.0, kPi / 2, kPi / 2}), 7.9577e-6, 1e-10);
    EXPECT_NEAR(geom.peak_gain(), expected, 1e-15);
}

TEST(ChannelGain, DiagonalReceiver)
{
    const auto geom = default_geometry();
    EXPECT_NEAR(channel_gain(geom, {2.0, kPi / 2, kPi / 2}), 1.9894e-6, 1e-10);
}

TEST(ChannelGain, ZeroOutsideFieldOfView)
{
    const auto geom = default_geometry();
    // theta = 60 degrees at d = 0.
    EXPECT_EQ(channel_gain(geom, {0.0, kPi / 2, deg_to_rad(30.0)}), 0.0);
    EXPECT_EQ(channel_gain(geom, {0.0, kPi / 2, deg_to_rad(150.0)}), 0.0);
}

TEST(ChannelGain, EqualsProfileTimesCosineInsideFov)
{
    const auto geom = default_geometry();
    const PathGainProfile profile(geom);
    CounterRng rng(11);
    for (int n = 0; n < 1000; ++n) {
        const double d = rng.uniform(0.0, 10.0);
        const double phi = rng.uniform(0.0, kPi);
        const double theta = incidence_angle(d, phi, geom.ell);
        const double h = channel_gain(geom, {d, phi, phi});
        if (inside_fov(theta, geom.half_fov)) {
            EXPECT_NEAR(h, profile.gain_factor(d) * std::cos(theta), 1e-18);
            // Squared gain times upsilon recovers cos^2(theta).
            EXPECT_NEAR(h * h * profile.upsilon(d), std::cos(theta) * std::cos(theta), 1e-12);
        } else {
            EXPECT_EQ(h, 0.0);
        }
    }
}

TEST(ChannelGain, NonIncreasingInDistanceAtMatchedOrientation)
{
    const auto geom = default_geometry();
    double prev = INFINITY;
    for (double d = 0.0; d <= 10.0; d += 0.05) {
        // Orientation that keeps theta = 0.
        const double phi = kPi - std::atan2(geom.ell, d);
        const double h = channel_gain(geom, {d, phi, phi});
        EXPECT_LE(h, prev);
        prev = h;
    }
}

TEST(MeanChannelGain, Examples)
{
    const auto geom = default_geometry();
    EXPECT_NEAR(mean_channel_gain(geom, 0.0, kPi / 2), 7.9577e-6, 1e-10);
    EXPECT_EQ(mean_channel_gain(geom, 0.0, deg_to_rad(30.0)), 0.0);
    EXPECT_NEAR(mean_channel_gain(geom, 2.0, kPi / 2), 1.9894e-6, 1e-10);
}

TEST(PathGainProfile, DistanceAtSquaredGainInvertsProfile)
{
    const PathGainProfile profile(default_geometry());
    for (double d : {0.0, 0.5, 2.0, 7.5, 10.0}) {
        const double g = profile.gain_factor(d);
        EXPECT_NEAR(profile.distance_at_squared_gain(g * g), d, 1e-9);
    }
}

TEST(LedGeometry, RejectsInvalidParameters)
{
    EXPECT_THROW(LedGeometry::make(0.0, deg_to_rad(60.0), 1e-4, deg_to_rad(50.0)), DomainError);
    EXPECT_THROW(LedGeometry::make(2.0, deg_to_rad(60.0), -1.0, deg_to_rad(50.0)), DomainError);
    EXPECT_THROW(LedGeometry::make(2.0, deg_to_rad(60.0), 1e-4, 0.0), DomainError);
}
