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

#include <cstddef>
#include <vector>

#include "macrodiv/channel.hpp"
#include "macrodiv/geometry.hpp"

namespace macrodiv {

/// E{10^(X/10)} for X ~ N(0, sigma_db^2): exp((sigma_db * ln10 / 10)^2 / 2).
double expected_shadowing_linear(double sigma_db);

/// E{(10^(X/10))^2} = exp(2 * (sigma_db * ln10 / 10)^2).
double shadowing_second_moment_linear(double sigma_db);

/// E{beta} at distance d: mean linear shadowing over linear path loss.
double expected_beta(const ChannelModelParams& params, double distance_m);

/// Average gain of M co-located antennas: M * E{beta}.
double expected_gain_centralized(const ChannelModelParams& params, std::size_t antennas, double distance_m);

struct GainTerm {
    double distance_m = 0.0;
    std::size_t antennas = 0;
    double contribution = 0.0;  // S_q * E{beta_q}, linear
};

struct GainExpression {
    DeploymentKind kind = DeploymentKind::Centralized;
    std::vector<GainTerm> terms;
    double total = 0.0;

    double total_db() const;
};

/// Per-AP expected contributions and their sum for any layout.
GainExpression expected_gain_distributed(const ChannelModelParams& params, const DeploymentLayout& layout,
                                         const Point3& device);

/// First two moments of |g|^2 under independent shadowing across APs and
/// CN(0,1) fading.
struct GainMoments {
    double mean = 0.0;
    double second_moment = 0.0;

    double variance() const noexcept { return second_moment - mean * mean; }
    double stddev() const;
    double cv() const;
};

GainMoments second_moment_gain(const ChannelModelParams& params, const DeploymentLayout& layout,
                               const Point3& device);

/// 10 log10(x); throws Error(Numeric) for x <= 0.
double to_db(double linear);

}  // namespace macrodiv
