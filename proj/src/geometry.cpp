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
#include "macrodiv/geometry.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "macrodiv/error.hpp"

namespace macrodiv {

void HallGeometry::validate() const {
    if (!(std::isfinite(length_x) && length_x > 0.0) || !(std::isfinite(length_y) && length_y > 0.0)) {
        throw_config(fmt::format("hall dimensions must be positive (got {} x {})", length_x, length_y));
    }
    if (!std::isfinite(ap_height) || !std::isfinite(device_height) || device_height < 0.0) {
        throw_config(fmt::format("device height must be >= 0 (got {})", device_height));
    }
    if (!(ap_height > device_height)) {
        throw_config(fmt::format("AP height {} must exceed device height {}", ap_height, device_height));
    }
}

std::string_view to_string(DeploymentKind kind) noexcept {
    switch (kind) {
        case DeploymentKind::Centralized: return "centralized";
        case DeploymentKind::Grid: return "grid";
        case DeploymentKind::RadioStripe: return "stripe";
    }
    return "unknown";
}

std::optional<DeploymentKind> parse_deployment_kind(std::string_view text) noexcept {
    if (text == "centralized") return DeploymentKind::Centralized;
    if (text == "grid") return DeploymentKind::Grid;
    if (text == "stripe") return DeploymentKind::RadioStripe;
    return std::nullopt;
}

DeploymentLayout::DeploymentLayout(DeploymentKind kind, std::vector<AccessPoint> aps)
    : kind_(kind), aps_(std::move(aps)) {
    if (aps_.empty()) throw_config("deployment layout has no access points");
    if (kind_ == DeploymentKind::Centralized && aps_.size() != 1) {
        throw_config(fmt::format("centralized layout must have exactly one AP (got {})", aps_.size()));
    }
    for (const auto& ap : aps_) {
        if (ap.antennas == 0) throw_config("every AP needs at least one antenna");
    }
    total_antennas_ = std::accumulate(aps_.begin(), aps_.end(), std::size_t{0},
                                      [](std::size_t acc, const AccessPoint& ap) { return acc + ap.antennas; });
}

bool fits_hall(const DeploymentLayout& layout, const HallGeometry& hall, double tol) {
    for (const auto& ap : layout.aps()) {
        const auto& p = ap.position;
        if (p.x < -tol || p.x > hall.length_x + tol) return false;
        if (p.y < -tol || p.y > hall.length_y + tol) return false;
        if (std::abs(p.z - hall.ap_height) > tol) return false;
    }
    return true;
}

DeploymentLayout make_centralized(const HallGeometry& hall, std::size_t antennas) {
    hall.validate();
    if (antennas == 0) throw_config("centralized deployment needs M >= 1 antennas");
    return DeploymentLayout(DeploymentKind::Centralized,
                            {AccessPoint{{hall.length_x / 2.0, hall.length_y / 2.0, hall.ap_height}, antennas}});
}

DeploymentLayout make_grid(const HallGeometry& hall, std::size_t ap_count, std::size_t antennas_per_ap) {
    hall.validate();
    if (ap_count == 0) throw_config("grid deployment needs Q >= 1 APs");
    if (antennas_per_ap == 0) throw_config("grid deployment needs S >= 1 antennas per AP");
    const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(ap_count))));
    if (side * side != ap_count) {
        throw_config(fmt::format("grid deployment needs a perfect-square Q (got {})", ap_count));
    }

    const double dx = hall.length_x / static_cast<double>(side);
    const double dy = hall.length_y / static_cast<double>(side);
    std::vector<AccessPoint> aps;
    aps.reserve(ap_count);
    for (std::size_t j = 0; j < side; ++j) {
        for (std::size_t i = 0; i < side; ++i) {
            aps.push_back({{(static_cast<double>(i) + 0.5) * dx, (static_cast<double>(j) + 0.5) * dy, hall.ap_height},
                           antennas_per_ap});
        }
    }
    return DeploymentLayout(DeploymentKind::Grid, std::move(aps));
}

namespace {

// Maps an arc length along the perimeter (counter-clockwise from (0,0)) to
// footprint coordinates.
std::pair<double, double> perimeter_point(const HallGeometry& hall, double s) {
    const double lx = hall.length_x;
    const double ly = hall.length_y;
    if (s < lx) return {s, 0.0};
    s -= lx;
    if (s < ly) return {lx, s};
    s -= ly;
    if (s < lx) return {lx - s, ly};
    s -= lx;
    return {0.0, ly - s};
}

}  // namespace

DeploymentLayout make_radio_stripe(const HallGeometry& hall, std::size_t ap_count, std::size_t antennas_per_ap) {
    hall.validate();
    if (ap_count < 4) throw_config(fmt::format("radio stripe needs Q >= 4 APs (got {})", ap_count));
    if (antennas_per_ap == 0) throw_config("radio stripe needs S >= 1 antennas per AP");

    const double perimeter = 2.0 * (hall.length_x + hall.length_y);
    const double spacing = perimeter / static_cast<double>(ap_count);
    std::vector<AccessPoint> aps;
    aps.reserve(ap_count);
    for (std::size_t q = 0; q < ap_count; ++q) {
        const auto [x, y] = perimeter_point(hall, (static_cast<double>(q) + 0.5) * spacing);
        aps.push_back({{x, y, hall.ap_height}, antennas_per_ap});
    }
    return DeploymentLayout(DeploymentKind::RadioStripe, std::move(aps));
}

Point3 typical_position(const HallGeometry& hall) {
    return {0.55 * hall.length_x, 0.75 * hall.length_y, hall.device_height};
}

Point3 worst_case_position(DeploymentKind kind, const HallGeometry& hall) {
    if (kind == DeploymentKind::RadioStripe) {
        return {hall.length_x / 2.0, hall.length_y / 2.0, hall.device_height};
    }
    return {0.0, 0.0, hall.device_height};
}

double distance_3d(const Point3& a, const Point3& b) noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace macrodiv
