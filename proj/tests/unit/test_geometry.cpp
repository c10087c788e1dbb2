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
#include <random>

#include "doctest.h"
#include "macrodiv/error.hpp"
#include "macrodiv/geometry.hpp"

using namespace macrodiv;

namespace {

HallGeometry hall(double dx = 100.0, double dy = 100.0) {
    HallGeometry h;
    h.length_x = dx;
    h.length_y = dy;
    return h;
}

bool same_point_set(std::vector<Point3> a, std::vector<Point3> b) {
    auto key = [](const Point3& p) { return std::make_tuple(std::round(p.x * 1e6), std::round(p.y * 1e6), std::round(p.z * 1e6)); };
    auto less = [&](const Point3& p, const Point3& q) { return key(p) < key(q); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (key(a[i]) != key(b[i])) return false;
    }
    return true;
}

std::vector<Point3> positions(const DeploymentLayout& layout) {
    std::vector<Point3> out;
    for (const auto& ap : layout.aps()) out.push_back(ap.position);
    return out;
}

}  // namespace

TEST_CASE("hall validation") {
    CHECK_NOTHROW(hall().validate());
    HallGeometry h = hall();
    h.length_x = 0.0;
    CHECK_THROWS_AS(h.validate(), Error);
    h = hall();
    h.device_height = 6.0;
    CHECK_THROWS_AS(h.validate(), Error);
    h = hall();
    h.device_height = -0.1;
    CHECK_THROWS_AS(h.validate(), Error);
}

TEST_CASE("centralized layout sits at the hall center") {
    const auto layout = make_centralized(hall(), 64);
    REQUIRE(layout.ap_count() == 1);
    CHECK(layout.aps()[0].position.x == 50.0);
    CHECK(layout.aps()[0].position.y == 50.0);
    CHECK(layout.aps()[0].position.z == 6.0);
    CHECK(layout.aps()[0].antennas == 64);
    CHECK(layout.total_antennas() == 64);

    CHECK(make_centralized(hall(), 1).aps()[0].antennas == 1);

    const auto off = make_centralized(hall(40, 60), 8);
    CHECK(off.aps()[0].position.x == 20.0);
    CHECK(off.aps()[0].position.y == 30.0);

    CHECK_THROWS_AS(make_centralized(hall(), 0), Error);
}

TEST_CASE("grid layout uses cell centers, row-major") {
    const auto q4 = make_grid(hall(), 4, 1);
    REQUIRE(q4.ap_count() == 4);
    const double expected[4][2] = {{25, 25}, {75, 25}, {25, 75}, {75, 75}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(q4.aps()[i].position.x == doctest::Approx(expected[i][0]));
        CHECK(q4.aps()[i].position.y == doctest::Approx(expected[i][1]));
    }

    const auto q16 = make_grid(hall(), 16, 4);
    CHECK(q16.total_antennas() == 64);
    CHECK(q16.aps()[0].position.x == doctest::Approx(12.5));
    CHECK(q16.aps()[1].position.x == doctest::Approx(37.5));
    CHECK(q16.aps()[4].position.y == doctest::Approx(37.5));

    const auto q64 = make_grid(hall(), 64, 1);
    CHECK(q64.aps()[0].position.x == doctest::Approx(6.25));
    CHECK(q64.aps()[0].position.y == doctest::Approx(6.25));
    CHECK(q64.aps()[1].position.x - q64.aps()[0].position.x == doctest::Approx(12.5));
    CHECK(q64.aps()[63].position.x == doctest::Approx(93.75));

    CHECK_THROWS_AS(make_grid(hall(), 15, 1), Error);
    CHECK_THROWS_AS(make_grid(hall(), 0, 1), Error);
    CHECK_THROWS_AS(make_grid(hall(), 16, 0), Error);
}

TEST_CASE("radio stripe places APs along the perimeter") {
    const auto q4 = make_radio_stripe(hall(), 4, 1);
    const double expected[4][2] = {{50, 0}, {100, 50}, {50, 100}, {0, 50}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(q4.aps()[i].position.x == doctest::Approx(expected[i][0]));
        CHECK(q4.aps()[i].position.y == doctest::Approx(expected[i][1]));
    }

    const auto q64 = make_radio_stripe(hall(), 64, 1);
    CHECK(q64.aps()[0].position.x == doctest::Approx(3.125));
    CHECK(q64.aps()[0].position.y == 0.0);
    CHECK(q64.aps()[1].position.x == doctest::Approx(9.375));
    std::size_t bottom = 0;
    for (const auto& ap : q64.aps()) bottom += ap.position.y == 0.0;
    CHECK(bottom == 16);

    const auto q16 = make_radio_stripe(hall(), 16, 4);
    CHECK(q16.total_antennas() == 64);

    CHECK_THROWS_AS(make_radio_stripe(hall(), 3, 1), Error);
}

TEST_CASE("property: stripes with Q divisible by 4 put Q/4 APs on every wall") {
    for (std::size_t q = 4; q <= 128; q += 4) {
        const auto layout = make_radio_stripe(hall(), q, 2);
        std::size_t walls[4] = {0, 0, 0, 0};
        for (const auto& ap : layout.aps()) {
            const auto& p = ap.position;
            if (p.y == 0.0) ++walls[0];
            else if (p.x == 100.0) ++walls[1];
            else if (p.y == 100.0) ++walls[2];
            else if (p.x == 0.0) ++walls[3];
        }
        for (auto w : walls) CHECK(w == q / 4);
        CHECK(layout.total_antennas() == 2 * q);
        CHECK(fits_hall(layout, hall()));
    }
}

TEST_CASE("property: grid layouts are symmetric under hall reflections") {
    for (std::size_t side : {1, 2, 3, 4, 8}) {
        const auto layout = make_grid(hall(80, 120), side * side, 3);
        const auto base = positions(layout);
        auto flip_x = base;
        auto flip_y = base;
        for (auto& p : flip_x) p.x = 80.0 - p.x;
        for (auto& p : flip_y) p.y = 120.0 - p.y;
        CHECK(same_point_set(base, flip_x));
        CHECK(same_point_set(base, flip_y));
        CHECK(layout.total_antennas() == 3 * side * side);
        CHECK(fits_hall(layout, hall(80, 120)));
    }
}

TEST_CASE("typical and worst-case positions") {
    HallGeometry h = hall();
    const auto t = typical_position(h);
    CHECK(t.x == doctest::Approx(55.0));
    CHECK(t.y == doctest::Approx(75.0));
    CHECK(t.z == 1.5);

    const auto small = typical_position(hall(10, 10));
    CHECK(small.x == doctest::Approx(5.5));
    CHECK(small.y == doctest::Approx(7.5));

    h.device_height = 0.0;
    CHECK(typical_position(h).z == 0.0);

    const auto c = worst_case_position(DeploymentKind::Centralized, hall());
    CHECK((c.x == 0.0 && c.y == 0.0 && c.z == 1.5));
    const auto g = worst_case_position(DeploymentKind::Grid, hall());
    CHECK((g.x == 0.0 && g.y == 0.0));
    const auto s = worst_case_position(DeploymentKind::RadioStripe, hall());
    CHECK((s.x == 50.0 && s.y == 50.0 && s.z == 1.5));
}

TEST_CASE("distance_3d") {
    CHECK(distance_3d({50, 50, 6}, {55, 75, 1.5}) == doctest::Approx(25.8891869319992).epsilon(1e-12));
    CHECK(distance_3d({0, 0, 6}, {0, 0, 1.5}) == doctest::Approx(4.5));
    CHECK(distance_3d({3, 4, 5}, {3, 4, 5}) == 0.0);
}

TEST_CASE("property: distance is symmetric and obeys the triangle inequality") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const Point3 a{u(gen), u(gen), u(gen)};
        const Point3 b{u(gen), u(gen), u(gen)};
        const Point3 c{u(gen), u(gen), u(gen)};
        CHECK(distance_3d(a, b) == distance_3d(b, a));
        CHECK(distance_3d(a, c) <= distance_3d(a, b) + distance_3d(b, c) + 1e-12);
    }
}

TEST_CASE("layout invariants") {
    CHECK_THROWS_AS(DeploymentLayout(DeploymentKind::Grid, {}), Error);
    CHECK_THROWS_AS(DeploymentLayout(DeploymentKind::Centralized, {AccessPoint{{}, 1}, AccessPoint{{}, 1}}), Error);
    CHECK_THROWS_AS(DeploymentLayout(DeploymentKind::Grid, {AccessPoint{{}, 0}}), Error);
    CHECK(parse_deployment_kind("stripe") == DeploymentKind::RadioStripe);
    CHECK_FALSE(parse_deployment_kind("ring").has_value());
}
