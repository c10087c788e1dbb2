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
#include "macrodiv/closedform.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "macrodiv/error.hpp"

namespace macrodiv {

namespace {

// Standard deviation of the natural-log shadowing: ln Z = X * ln(10) / 10.
double log_sigma(double sigma_db) {
    if (!(sigma_db >= 0.0) || !std::isfinite(sigma_db)) {
        throw_config(fmt::format("shadowing spread must be >= 0 dB (got {})", sigma_db));
    }
    return sigma_db * std::numbers::ln10 / 10.0;
}

}  // namespace

double expected_shadowing_linear(double sigma_db) {
    const double s = log_sigma(sigma_db);
    return std::exp(s * s / 2.0);
}

double shadowing_second_moment_linear(double sigma_db) {
    const double s = log_sigma(sigma_db);
    return std::exp(2.0 * s * s);
}

double expected_beta(const ChannelModelParams& params, double distance_m) {
    return expected_shadowing_linear(params.shadowing_db) * path_gain_linear(params, distance_m);
}

double expected_gain_centralized(const ChannelModelParams& params, std::size_t antennas, double distance_m) {
    if (antennas == 0) throw_config("centralized gain needs M >= 1");
    return static_cast<double>(antennas) * expected_beta(params, distance_m);
}

double GainExpression::total_db() const { return to_db(total); }

GainExpression expected_gain_distributed(const ChannelModelParams& params, const DeploymentLayout& layout,
                                         const Point3& device) {
    params.validate();
    GainExpression expr;
    expr.kind = layout.kind();
    expr.terms.reserve(layout.ap_count());
    for (const auto& ap : layout.aps()) {
        if (!(device.z < ap.position.z)) {
            throw_config(fmt::format("device height {} m must be below AP height {} m", device.z, ap.position.z));
        }
        const double d = distance_3d(ap.position, device);
        const double contribution = static_cast<double>(ap.antennas) * expected_beta(params, d);
        expr.terms.push_back({d, ap.antennas, contribution});
        expr.total += contribution;
    }
    return expr;
}

double GainMoments::stddev() const {
    const double v = variance();
    if (!(v >= 0.0)) throw_numeric(fmt::format("negative analytic variance {}", v));
    return std::sqrt(v);
}

double GainMoments::cv() const { return stddev() / mean; }

GainMoments second_moment_gain(const ChannelModelParams& params, const DeploymentLayout& layout,
                               const Point3& device) {
    const GainExpression expr = expected_gain_distributed(params, layout, device);
    const double z2 = shadowing_second_moment_linear(params.shadowing_db);

    // |h_q|^2 ~ Gamma(S, 1), so E{|h_q|^4} = S (S + 1).
    double own = 0.0;
    double sum_a = 0.0;
    double sum_a_sq = 0.0;
    for (const auto& term : expr.terms) {
        const double s = static_cast<double>(term.antennas);
        const double pg = path_gain_linear(params, term.distance_m);
        own += z2 * pg * pg * s * (s + 1.0);
        sum_a += term.contribution;
        sum_a_sq += term.contribution * term.contribution;
    }
    GainMoments m;
    m.mean = expr.total;
    m.second_moment = own + (sum_a * sum_a - sum_a_sq);
    return m;
}

double to_db(double linear) {
    if (!(linear > 0.0) || !std::isfinite(linear)) {
        throw_numeric(fmt::format("cannot express {} in dB", linear));
    }
    return 10.0 * std::log10(linear);
}

}  // namespace macrodiv
