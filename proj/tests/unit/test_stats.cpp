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
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "macrodiv/closedform.hpp"
#include "macrodiv/error.hpp"
#include "macrodiv/stats.hpp"

using namespace macrodiv;

namespace {

const ChannelModelParams kRef{};
const HallGeometry kHall{};

ChannelModelParams no_shadowing() {
    ChannelModelParams p;
    p.shadowing_db = 0.0;
    return p;
}

}  // namespace

TEST_CASE("sample set summary") {
    const auto set = GainSampleSet::from_samples({1.0, 2.0, 3.0}, 4);
    CHECK(set.n() == 3);
    CHECK(set.mean == doctest::Approx(2.0));
    CHECK(*set.stddev == doctest::Approx(1.0));
    CHECK(*set.cv == *set.stddev / set.mean);
    CHECK(set.seed == 4);

    const auto one = GainSampleSet::from_samples({5.0}, 0);
    CHECK_FALSE(one.stddev.has_value());
    CHECK_FALSE(one.cv.has_value());

    CHECK_THROWS_AS(GainSampleSet::from_samples({}, 0), Error);
    CHECK_THROWS_AS(GainSampleSet::from_samples({1.0, 0.0}, 0), Error);
}

TEST_CASE("empirical CCDF") {
    const auto set = GainSampleSet::from_samples({1.0, 2.0, 3.0}, 0);
    const double t = 10.0 * std::log10(2.0);
    const double thresholds[] = {t};
    CHECK(empirical_ccdf(set, thresholds).points[0].probability == doctest::Approx(1.0 / 3.0));

    const double edges[] = {10.0, -1.0};
    const auto table = empirical_ccdf(set, edges);
    CHECK(table.points[0].threshold_db == -1.0);
    CHECK(table.points[0].probability == 1.0);
    CHECK(table.points[1].probability == 0.0);

    GainSampleSet empty;
    CHECK_THROWS_AS(empirical_ccdf(empty, edges), Error);
}

TEST_CASE("property: CCDF is monotone and complements the CDF") {
    const auto grid = make_grid(kHall, 16, 4);
    const auto set = monte_carlo_gains(grid, typical_position(kHall), kRef, {20'000, 3, 0});
    const auto lo = to_db(*std::min_element(set.samples.begin(), set.samples.end()));
    const auto hi = to_db(*std::max_element(set.samples.begin(), set.samples.end()));
    const auto thresholds = default_threshold_grid(lo, hi);
    CHECK(thresholds.front() <= lo - 1.0);
    CHECK(thresholds.back() >= hi + 1.0);
    const auto table = empirical_ccdf(set, thresholds);
    CHECK(table.points.front().probability == 1.0);
    CHECK(table.points.back().probability == 0.0);
    for (std::size_t i = 1; i < table.points.size(); ++i) {
        CHECK(table.points[i].probability <= table.points[i - 1].probability);
    }
    for (std::size_t i = 0; i < table.points.size(); i += 37) {
        const auto& p = table.points[i];
        CHECK(p.probability + empirical_cdf(set, p.threshold_db) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("TD grid CCDF dominates centralized at the median") {
    const Point3 device = typical_position(kHall);
    const auto central = monte_carlo_gains(make_centralized(kHall, 64), device, kRef, {50'000, 8, 0});
    const auto td = monte_carlo_gains(make_grid(kHall, 64, 1), device, kRef, {50'000, 8, 0});
    auto sorted = central.samples;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median[] = {to_db(sorted[sorted.size() / 2])};
    CHECK(empirical_ccdf(td, median).points[0].probability > empirical_ccdf(central, median).points[0].probability);
}

TEST_CASE("Monte Carlo basics") {
    const auto single = make_centralized(kHall, 1);
    const Point3 device = typical_position(kHall);
    CHECK_THROWS_AS(monte_carlo_gains(single, device, kRef, {0, 1, 0}), Error);

    const auto set = monte_carlo_gains(single, device, no_shadowing(), {200'000, 12, 0});
    CHECK(std::abs(*set.cv - 1.0) < 3.0 * cv_standard_error(set));
    CHECK(std::all_of(set.samples.begin(), set.samples.end(), [](double g) { return g > 0.0; }));
}

TEST_CASE("property: results do not depend on the thread count") {
    const auto grid = make_grid(kHall, 16, 4);
    const Point3 device = typical_position(kHall);
    const auto one = monte_carlo_gains(grid, device, kRef, {30'000, 21, 1});
    const auto four = monte_carlo_gains(grid, device, kRef, {30'000, 21, 4});
    const auto seven = monte_carlo_gains(grid, device, kRef, {30'000, 21, 7});
    CHECK(one.samples == four.samples);
    CHECK(one.samples == seven.samples);
    CHECK(one.mean == four.mean);
    CHECK(*one.stddev == *seven.stddev);

    const std::size_t ks[] = {1, 4};
    const auto s1 = subset_sweep(grid, device, kRef, ks, SelectionRule::LargestBeta, {30'000, 21, 1});
    const auto s3 = subset_sweep(grid, device, kRef, ks, SelectionRule::LargestBeta, {30'000, 21, 3});
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(s1[i].ratio == s3[i].ratio);
        CHECK(s1[i].gains.samples == s3[i].gains.samples);
    }
}

TEST_CASE("property: standard error halves when n quadruples") {
    const auto single = make_centralized(kHall, 4);
    const Point3 device = typical_position(kHall);
    const auto small = monte_carlo_gains(single, device, no_shadowing(), {40'000, 2, 0});
    const auto large = monte_carlo_gains(single, device, no_shadowing(), {160'000, 2, 0});
    CHECK(mean_standard_error(small) / mean_standard_error(large) == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("subset selection") {
    const auto grid = make_grid(kHall, 64, 1);
    const Point3 center_of_cell{6.25, 6.25, 1.5};
    RandomStream rng(1);
    const auto flat = sample_realization(grid, center_of_cell, no_shadowing(), rng);

    const auto all = select_subset(flat, 64);
    CHECK(all.size() == 64);
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < 64; ++i) CHECK(sorted[i] == i);

    CHECK(select_subset(flat, 1) == std::vector<std::size_t>{0});
    CHECK(select_subset(flat, 1, SelectionRule::NearestDistance) == std::vector<std::size_t>{0});

    // Without shadowing the beta ranking is the distance ranking.
    CHECK(select_subset(flat, 10, SelectionRule::LargestBeta) == select_subset(flat, 10, SelectionRule::NearestDistance));
    // Ties (APs 1 and 8 are equidistant) go to the lower index.
    const auto three = select_subset(flat, 3, SelectionRule::NearestDistance);
    CHECK(three == std::vector<std::size_t>{0, 1, 8});

    CHECK_THROWS_AS(select_subset(flat, 0), Error);
    CHECK_THROWS_AS(select_subset(flat, 65), Error);

    RandomStream shadow_rng(4);
    const auto shadowed = sample_realization(grid, typical_position(kHall), kRef, shadow_rng);
    const auto top = select_subset(shadowed, 5, SelectionRule::LargestBeta);
    for (std::size_t j = 1; j < top.size(); ++j) CHECK(shadowed.beta[top[j - 1]] >= shadowed.beta[top[j]]);
}

TEST_CASE("subset sweep") {
    const auto grid = make_grid(kHall, 64, 1);
    const Point3 device = typical_position(kHall);
    const RunOptions options{20'000, 31, 0};
    const std::size_t ks[] = {1, 2, 4, 8, 16, 32, 63, 64};
    for (const auto rule : {SelectionRule::NearestDistance, SelectionRule::LargestBeta}) {
        const auto results = subset_sweep(grid, device, kRef, ks, rule, options);
        REQUIRE(results.size() == 8);
        for (std::size_t i = 1; i < results.size(); ++i) {
            CHECK(results[i].ratio >= results[i - 1].ratio);
            CHECK(results[i].gains.mean >= results[i - 1].gains.mean);
            for (std::size_t t = 0; t < options.trials; t += 97) {
                CHECK(results[i].gains.samples[t] >= results[i - 1].gains.samples[t]);
            }
        }
        CHECK(results.back().ratio == 1.0);
        CHECK(results.front().ratio > 0.0);
        const auto full = monte_carlo_gains(grid, device, kRef, options);
        CHECK(results.back().gains.samples == full.samples);
        CHECK(results.back().gains.mean == full.mean);
    }
    const std::size_t bad[] = {0};
    CHECK_THROWS_AS(subset_sweep(grid, device, kRef, bad, SelectionRule::LargestBeta, options), Error);
    const std::size_t too_big[] = {65};
    CHECK_THROWS_AS(subset_sweep(grid, device, kRef, too_big, SelectionRule::LargestBeta, options), Error);
}

TEST_CASE("subset CV decreases with k at the reference setup") {
    const auto grid = make_grid(kHall, 64, 1);
    const std::size_t ks[] = {1, 4, 8, 16, 64};
    for (const Point3 device : {typical_position(kHall), Point3{0, 0, 1.5}}) {
        const auto r = subset_sweep(grid, device, kRef, ks, SelectionRule::NearestDistance, {100'000, 5, 0});
        for (std::size_t i = 1; i < r.size(); ++i) CHECK(*r[i].gains.cv <= *r[i - 1].gains.cv);
    }
}
