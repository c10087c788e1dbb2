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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "macrodiv/channel.hpp"
#include "macrodiv/geometry.hpp"

namespace macrodiv {

/// Monte Carlo draws of |g|^2 with their summary statistics. The standard
/// deviation (n - 1 normalization) and CV are undefined for a single sample.
struct GainSampleSet {
    std::vector<double> samples;
    double mean = 0.0;
    std::optional<double> stddev;
    std::optional<double> cv;
    std::uint64_t seed = 0;

    std::size_t n() const noexcept { return samples.size(); }
    double mean_db() const;
    std::optional<double> stddev_db() const;

    /// Computes the summary with compensated summation in sample order, so
    /// the result only depends on the sample values. Throws Error(Numeric) on
    /// an empty set or a non-positive sample.
    static GainSampleSet from_samples(std::vector<double> samples, std::uint64_t seed);
};

/// Standard error of the sample mean, s / sqrt(n). Requires n >= 2.
double mean_standard_error(const GainSampleSet& set);

/// Delta-method standard error of the sample CV from the first four sample
/// moments. Requires n >= 2.
double cv_standard_error(const GainSampleSet& set);

struct CcdfPoint {
    double threshold_db = 0.0;
    double probability = 0.0;
};

/// Empirical P(10 log10(gain) > t); thresholds ascending.
struct CcdfTable {
    std::vector<CcdfPoint> points;
};

/// Strict-inequality CCDF at each threshold. Thresholds are evaluated in
/// ascending order regardless of input order.
CcdfTable empirical_ccdf(const GainSampleSet& set, std::span<const double> thresholds_db);

/// Fraction of samples with 10 log10(gain) <= t.
double empirical_cdf(const GainSampleSet& set, double threshold_db);

/// 0.1 dB steps covering [lo_db - 1, hi_db + 1].
std::vector<double> default_threshold_grid(double lo_db, double hi_db);

struct RunOptions {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// Runs `block(begin, end)` over fixed-size, contiguous trial blocks on a
/// pool of worker threads. Block boundaries do not depend on the thread
/// count. The first exception thrown by any block is rethrown.
void run_trial_blocks(std::uint64_t trials, unsigned threads,
                      const std::function<void(std::uint64_t, std::uint64_t)>& block);

/// `trials` independent realizations; trial i always uses
/// RandomStream::substream(seed, i).
GainSampleSet monte_carlo_gains(const DeploymentLayout& layout, const Point3& device,
                                const ChannelModelParams& params, const RunOptions& options);

enum class SelectionRule {
    NearestDistance,  // rank APs by path gain (distance only)
    LargestBeta,      // rank APs by realized beta, shadowing included
};

std::string_view to_string(SelectionRule rule) noexcept;
std::optional<SelectionRule> parse_selection_rule(std::string_view text) noexcept;

/// Indices of the k best APs under `rule`, best first; ties go to the lower
/// index. Throws Error(Config) unless 1 <= k <= Q.
std::vector<std::size_t> select_subset(const ChannelRealization& realization, std::size_t k,
                                       SelectionRule rule = SelectionRule::LargestBeta);

struct SubsetResult {
    std::size_t cardinality = 0;
    GainSampleSet gains;
    double ratio = 0.0;  // mean over trials of subset gain / full gain
};

/// Subset gains for each cardinality, computed from the same realizations
/// (common random numbers across k). The k = Q entry reproduces
/// monte_carlo_gains for the same seed exactly.
std::vector<SubsetResult> subset_sweep(const DeploymentLayout& layout, const Point3& device,
                                       const ChannelModelParams& params,
                                       std::span<const std::size_t> cardinalities, SelectionRule rule,
                                       const RunOptions& options);

}  // namespace macrodiv
