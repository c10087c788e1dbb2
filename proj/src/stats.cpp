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
#include "macrodiv/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include <fmt/format.h>

#include "macrodiv/closedform.hpp"
#include "macrodiv/error.hpp"

namespace macrodiv {

namespace {

constexpr std::uint64_t kBlockSize = 4096;

// Neumaier compensated summation.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double compensated_mean(std::span<const double> xs) {
    CompensatedSum sum;
    for (double x : xs) sum.add(x);
    return sum.value() / static_cast<double>(xs.size());
}

struct CentralMoments {
    double mean = 0.0;
    double variance = 0.0;  // n - 1 normalization
    double m3 = 0.0;        // biased third central moment
    double m4 = 0.0;        // biased fourth central moment
};

CentralMoments central_moments(std::span<const double> xs) {
    const auto n = static_cast<double>(xs.size());
    CentralMoments out;
    out.mean = compensated_mean(xs);
    CompensatedSum s2, s3, s4;
    for (double x : xs) {
        const double d = x - out.mean;
        const double d2 = d * d;
        s2.add(d2);
        s3.add(d2 * d);
        s4.add(d2 * d2);
    }
    out.variance = s2.value() / (n - 1.0);
    out.m3 = s3.value() / n;
    out.m4 = s4.value() / n;
    return out;
}

void require_two_samples(const GainSampleSet& set) {
    if (set.n() < 2) throw_numeric("standard error needs at least two samples");
}

}  // namespace

double GainSampleSet::mean_db() const { return to_db(mean); }

std::optional<double> GainSampleSet::stddev_db() const {
    if (!stddev || *stddev <= 0.0) return std::nullopt;
    return to_db(*stddev);
}

GainSampleSet GainSampleSet::from_samples(std::vector<double> samples, std::uint64_t seed) {
    if (samples.empty()) throw_numeric("gain sample set is empty");
    for (double x : samples) {
        if (!(x > 0.0) || !std::isfinite(x)) throw_numeric(fmt::format("invalid gain sample {}", x));
    }
    GainSampleSet set;
    set.seed = seed;
    set.samples = std::move(samples);
    if (set.samples.size() == 1) {
        set.mean = set.samples.front();
        return set;
    }
    const CentralMoments m = central_moments(set.samples);
    set.mean = m.mean;
    set.stddev = std::sqrt(m.variance);
    set.cv = *set.stddev / set.mean;
    return set;
}

double mean_standard_error(const GainSampleSet& set) {
    require_two_samples(set);
    return *set.stddev / std::sqrt(static_cast<double>(set.n()));
}

double cv_standard_error(const GainSampleSet& set) {
    require_two_samples(set);
    const CentralMoments m = central_moments(set.samples);
    const double n = static_cast<double>(set.n());
    const double s = std::sqrt(m.variance);
    const double d_mean = -s / (m.mean * m.mean);
    const double d_var = 1.0 / (2.0 * s * m.mean);
    const double var_cv = (d_mean * d_mean * m.variance + d_var * d_var * (m.m4 - m.variance * m.variance) +
                           2.0 * d_mean * d_var * m.m3) / n;
    return std::sqrt(std::max(var_cv, 0.0));
}

CcdfTable empirical_ccdf(const GainSampleSet& set, std::span<const double> thresholds_db) {
    if (set.samples.empty()) throw_config("cannot build a CCDF from an empty sample set");
    std::vector<double> sorted_db(set.samples.size());
    std::transform(set.samples.begin(), set.samples.end(), sorted_db.begin(), [](double g) { return to_db(g); });
    std::sort(sorted_db.begin(), sorted_db.end());

    std::vector<double> thresholds(thresholds_db.begin(), thresholds_db.end());
    std::sort(thresholds.begin(), thresholds.end());

    const auto n = static_cast<double>(sorted_db.size());
    CcdfTable table;
    table.points.reserve(thresholds.size());
    for (double t : thresholds) {
        const auto above = sorted_db.end() - std::upper_bound(sorted_db.begin(), sorted_db.end(), t);
        table.points.push_back({t, static_cast<double>(above) / n});
    }
    return table;
}

double empirical_cdf(const GainSampleSet& set, double threshold_db) {
    if (set.samples.empty()) throw_config("cannot build a CDF from an empty sample set");
    const auto at_or_below = std::count_if(set.samples.begin(), set.samples.end(),
                                           [&](double g) { return to_db(g) <= threshold_db; });
    return static_cast<double>(at_or_below) / static_cast<double>(set.n());
}

std::vector<double> default_threshold_grid(double lo_db, double hi_db) {
    if (!std::isfinite(lo_db) || !std::isfinite(hi_db) || lo_db > hi_db) {
        throw_numeric(fmt::format("invalid CCDF range [{}, {}]", lo_db, hi_db));
    }
    // Work in integer tenths of a dB so grid points print exactly.
    const auto first = static_cast<long long>(std::floor((lo_db - 1.0) * 10.0));
    const auto last = static_cast<long long>(std::ceil((hi_db + 1.0) * 10.0));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(last - first + 1));
    for (long long k = first; k <= last; ++k) grid.push_back(static_cast<double>(k) / 10.0);
    return grid;
}

void run_trial_blocks(std::uint64_t trials, unsigned threads,
                      const std::function<void(std::uint64_t, std::uint64_t)>& block) {
    const std::uint64_t blocks = (trials + kBlockSize - 1) / kBlockSize;
    unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(blocks, 1)));

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= blocks) return;
            try {
                block(b * kBlockSize, std::min(trials, (b + 1) * kBlockSize));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(blocks);
                return;
            }
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

GainSampleSet monte_carlo_gains(const DeploymentLayout& layout, const Point3& device,
                                const ChannelModelParams& params, const RunOptions& options) {
    if (options.trials == 0) throw_config("Monte Carlo needs at least one trial");
    const ChannelSampler sampler(layout, device, params);
    std::vector<double> samples(options.trials);
    run_trial_blocks(options.trials, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
        ChannelRealization realization;
        for (std::uint64_t i = begin; i < end; ++i) {
            RandomStream rng = RandomStream::substream(options.seed, i);
            sampler.sample(rng, realization);
            samples[i] = realization.gain;
        }
    });
    return GainSampleSet::from_samples(std::move(samples), options.seed);
}

std::string_view to_string(SelectionRule rule) noexcept {
    return rule == SelectionRule::NearestDistance ? "nearest" : "largest_beta";
}

std::optional<SelectionRule> parse_selection_rule(std::string_view text) noexcept {
    if (text == "nearest") return SelectionRule::NearestDistance;
    if (text == "largest_beta") return SelectionRule::LargestBeta;
    return std::nullopt;
}

namespace {

// Orders AP indices best-first by `score`, lower index on ties, and keeps
// the first k in place.
void rank_top(std::span<const double> score, std::size_t k, std::vector<std::size_t>& order) {
    order.resize(score.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          return score[a] > score[b] || (score[a] == score[b] && a < b);
                      });
}

}  // namespace

std::vector<std::size_t> select_subset(const ChannelRealization& realization, std::size_t k, SelectionRule rule) {
    const std::size_t q = realization.ap_count();
    if (k < 1 || k > q) throw_config(fmt::format("subset size {} outside [1, {}]", k, q));
    std::vector<std::size_t> order;
    rank_top(rule == SelectionRule::LargestBeta ? std::span<const double>(realization.beta)
                                                : std::span<const double>(realization.path_gain),
             k, order);
    order.resize(k);
    return order;
}

std::vector<SubsetResult> subset_sweep(const DeploymentLayout& layout, const Point3& device,
                                       const ChannelModelParams& params,
                                       std::span<const std::size_t> cardinalities, SelectionRule rule,
                                       const RunOptions& options) {
    if (options.trials == 0) throw_config("subset sweep needs at least one trial");
    const std::size_t q = layout.ap_count();
    if (cardinalities.empty()) throw_config("subset sweep needs at least one cardinality");
    for (std::size_t k : cardinalities) {
        if (k < 1 || k > q) throw_config(fmt::format("subset size {} outside [1, {}]", k, q));
    }
    const std::size_t k_max = *std::max_element(cardinalities.begin(), cardinalities.end());
    const ChannelSampler sampler(layout, device, params);

    // Distance ranking is the same in every trial.
    std::vector<std::size_t> fixed_order;
    if (rule == SelectionRule::NearestDistance) rank_top(sampler.path_gains(), q, fixed_order);

    const std::size_t kinds = cardinalities.size();
    std::vector<std::vector<double>> gains(kinds, std::vector<double>(options.trials));
    std::vector<std::vector<double>> ratios(kinds, std::vector<double>(options.trials));

    run_trial_blocks(options.trials, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
        ChannelRealization realization;
        std::vector<std::size_t> order;
        std::vector<double> prefix(k_max + 1);
        for (std::uint64_t i = begin; i < end; ++i) {
            RandomStream rng = RandomStream::substream(options.seed, i);
            sampler.sample(rng, realization);
            const std::vector<std::size_t>* ranked = &fixed_order;
            if (rule == SelectionRule::LargestBeta) {
                rank_top(realization.beta, k_max, order);
                ranked = &order;
            }
            prefix[0] = 0.0;
            for (std::size_t j = 0; j < k_max; ++j) prefix[j + 1] = prefix[j] + realization.ap_gain[(*ranked)[j]];

            const double full = realization.gain;
            for (std::size_t c = 0; c < kinds; ++c) {
                const std::size_t k = cardinalities[c];
                // Summation order differs from the full sum; clamp so that
                // rounding cannot push a strict subset above the full gain.
                const double subset = k == q ? full : std::min(prefix[k], full);
                gains[c][i] = subset;
                ratios[c][i] = subset / full;
            }
        }
    });

    std::vector<SubsetResult> results;
    results.reserve(kinds);
    for (std::size_t c = 0; c < kinds; ++c) {
        SubsetResult r;
        r.cardinality = cardinalities[c];
        r.ratio = compensated_mean(ratios[c]);
        r.gains = GainSampleSet::from_samples(std::move(gains[c]), options.seed);
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace macrodiv
