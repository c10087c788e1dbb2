// SPDX-License-Identifier: Apache-2.0
//
// macrodiv: macro-diversity and signal-strength variability simulator
// Copyright (C) 2026 The macrodiv authors
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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "macrodiv/geometry.hpp"
#include "macrodiv/rng.hpp"

namespace macrodiv {

/// Indoor-factory large-scale model: log-distance path loss plus lognormal
/// shadowing.
struct ChannelModelParams {
    double carrier_ghz = 3.5;
    double path_loss_exponent = 3.19;
    double shadowing_db = 7.56;  // standard deviation of the dB shadowing term

    void validate() const;
};

/// Mean path loss in dB at a 3D distance in meters. Throws Error(Config) for
/// d <= 0.
double path_loss_db(const ChannelModelParams& params, double distance_m);

/// Reciprocal of the linear path loss (the deterministic part of beta).
double path_gain_linear(const ChannelModelParams& params, double distance_m);

/// Zero-mean Gaussian shadowing draw in dB. Always consumes one standard
/// normal from `rng`, even when the spread is zero.
double sample_shadowing_db(const ChannelModelParams& params, RandomStream& rng);

/// One draw of the large-scale coefficient beta = 10^(X/10) / PL(d).
double sample_large_scale(const ChannelModelParams& params, double distance_m, RandomStream& rng);

/// One channel draw for a device and every AP of a layout. Buffers are sized
/// on first use and reused afterwards, so a realization can be refilled in a
/// hot loop without allocating.
struct ChannelRealization {
    std::vector<double> beta;        // per AP, linear, shadowing included
    std::vector<double> path_gain;   // per AP, 1 / PL(d_q), no shadowing
    std::vector<double> ap_gain;     // per AP, beta_q * |h_q|^2
    std::vector<std::complex<double>> fading;  // all APs, concatenated
    std::vector<std::size_t> fading_offset;    // size Q + 1
    double gain = 0.0;               // |g|^2 = sum of ap_gain

    std::size_t ap_count() const noexcept { return beta.size(); }

    std::span<const std::complex<double>> fading_of(std::size_t ap) const {
        return std::span<const std::complex<double>>(fading).subspan(
            fading_offset[ap], fading_offset[ap + 1] - fading_offset[ap]);
    }
};

/// Binds a layout, a device position and the model parameters, and
/// precomputes distances and path gains so repeated sampling only touches
/// the random parts.
///
/// Randomness is consumed in a fixed order per realization: one standard
/// normal per AP for shadowing (AP 1..Q), then for AP 1..Q and each of its
/// antennas the real and imaginary part of the fading coefficient.
class ChannelSampler {
public:
    ChannelSampler(const DeploymentLayout& layout, const Point3& device, const ChannelModelParams& params);

    void sample(RandomStream& rng, ChannelRealization& out) const;

    std::size_t ap_count() const noexcept { return distances_.size(); }
    std::span<const double> distances() const noexcept { return distances_; }
    std::span<const double> path_gains() const noexcept { return path_gains_; }
    std::span<const std::size_t> antennas() const noexcept { return antennas_; }

    /// Smallest device-to-AP distance; values below 1 m are outside the
    /// validated range of the path-loss model.
    double min_distance() const noexcept;

private:
    ChannelModelParams params_;
    std::vector<double> distances_;
    std::vector<double> path_gains_;
    std::vector<std::size_t> antennas_;
    std::size_t total_antennas_ = 0;
};

/// Single realization. Throws Error(Config) if the device is not strictly
/// below every AP.
ChannelRealization sample_realization(const DeploymentLayout& layout, const Point3& device,
                                      const ChannelModelParams& params, RandomStream& rng);

}  // namespace macrodiv
