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
#include "macrodiv/channel.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "macrodiv/error.hpp"

namespace macrodiv {

void ChannelModelParams::validate() const {
    if (!(std::isfinite(carrier_ghz) && carrier_ghz > 0.0)) {
        throw_config(fmt::format("carrier frequency must be positive (got {} GHz)", carrier_ghz));
    }
    if (!(std::isfinite(path_loss_exponent) && path_loss_exponent > 0.0)) {
        throw_config(fmt::format("path-loss exponent must be positive (got {})", path_loss_exponent));
    }
    if (!(std::isfinite(shadowing_db) && shadowing_db >= 0.0)) {
        throw_config(fmt::format("shadowing spread must be >= 0 dB (got {})", shadowing_db));
    }
}

double path_loss_db(const ChannelModelParams& params, double distance_m) {
    if (!(distance_m > 0.0) || !std::isfinite(distance_m)) {
        throw_config(fmt::format("path loss is undefined at distance {} m", distance_m));
    }
    return 32.5 + 20.0 * std::log10(params.carrier_ghz) +
           10.0 * params.path_loss_exponent * std::log10(distance_m);
}

double path_gain_linear(const ChannelModelParams& params, double distance_m) {
    return std::pow(10.0, -path_loss_db(params, distance_m) / 10.0);
}

double sample_shadowing_db(const ChannelModelParams& params, RandomStream& rng) {
    std::normal_distribution<double> standard(0.0, 1.0);
    return params.shadowing_db * standard(rng);
}

double sample_large_scale(const ChannelModelParams& params, double distance_m, RandomStream& rng) {
    const double gain = path_gain_linear(params, distance_m);
    return gain * std::pow(10.0, sample_shadowing_db(params, rng) / 10.0);
}

ChannelSampler::ChannelSampler(const DeploymentLayout& layout, const Point3& device,
                               const ChannelModelParams& params)
    : params_(params) {
    params_.validate();
    const auto aps = layout.aps();
    distances_.reserve(aps.size());
    path_gains_.reserve(aps.size());
    antennas_.reserve(aps.size());
    for (const auto& ap : aps) {
        if (!(device.z < ap.position.z)) {
            throw_config(fmt::format("device height {} m must be below AP height {} m", device.z, ap.position.z));
        }
        const double d = distance_3d(ap.position, device);
        distances_.push_back(d);
        path_gains_.push_back(path_gain_linear(params_, d));
        antennas_.push_back(ap.antennas);
    }
    total_antennas_ = layout.total_antennas();
}

double ChannelSampler::min_distance() const noexcept {
    return *std::min_element(distances_.begin(), distances_.end());
}

void ChannelSampler::sample(RandomStream& rng, ChannelRealization& out) const {
    const std::size_t q_count = distances_.size();
    if (out.beta.size() != q_count || out.fading.size() != total_antennas_) {
        out.beta.assign(q_count, 0.0);
        out.ap_gain.assign(q_count, 0.0);
        out.fading.assign(total_antennas_, {});
        out.fading_offset.assign(q_count + 1, 0);
        for (std::size_t q = 0; q < q_count; ++q) {
            out.fading_offset[q + 1] = out.fading_offset[q] + antennas_[q];
        }
    }
    out.path_gain.assign(path_gains_.begin(), path_gains_.end());

    std::normal_distribution<double> shadow(0.0, 1.0);
    for (std::size_t q = 0; q < q_count; ++q) {
        const double x_db = params_.shadowing_db * shadow(rng);
        out.beta[q] = path_gains_[q] * std::pow(10.0, x_db / 10.0);
    }

    // CN(0, 1): real and imaginary parts each have variance 1/2.
    std::normal_distribution<double> component(0.0, std::sqrt(0.5));
    double gain = 0.0;
    for (std::size_t q = 0; q < q_count; ++q) {
        double norm_sq = 0.0;
        for (std::size_t a = out.fading_offset[q]; a < out.fading_offset[q + 1]; ++a) {
            const double re = component(rng);
            const double im = component(rng);
            out.fading[a] = {re, im};
            norm_sq += re * re + im * im;
        }
        out.ap_gain[q] = out.beta[q] * norm_sq;
        gain += out.ap_gain[q];
    }
    out.gain = gain;
}

ChannelRealization sample_realization(const DeploymentLayout& layout, const Point3& device,
                                      const ChannelModelParams& params, RandomStream& rng) {
    ChannelSampler sampler(layout, device, params);
    ChannelRealization out;
    sampler.sample(rng, out);
    return out;
}

}  // namespace macrodiv
