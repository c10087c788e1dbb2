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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace macrodiv {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Rectangular factory hall. All lengths in meters.
struct HallGeometry {
    double length_x = 100.0;
    double length_y = 100.0;
    double ap_height = 6.0;
    double device_height = 1.5;

    /// Throws Error(Config) unless length_x, length_y > 0 and
    /// ap_height > device_height >= 0.
    void validate() const;
};

enum class DeploymentKind { Centralized, Grid, RadioStripe };

std::string_view to_string(DeploymentKind kind) noexcept;
std::optional<DeploymentKind> parse_deployment_kind(std::string_view text) noexcept;

struct AccessPoint {
    Point3 position;
    std::size_t antennas = 1;
};

/// AP positions and antenna counts of one deployment scheme. Instances are
/// immutable once built; the constructor enforces the structural invariants
/// (non-empty, every AP has at least one antenna, centralized has one AP).
class DeploymentLayout {
public:
    DeploymentLayout(DeploymentKind kind, std::vector<AccessPoint> aps);

    DeploymentKind kind() const noexcept { return kind_; }
    std::span<const AccessPoint> aps() const noexcept { return aps_; }
    std::size_t ap_count() const noexcept { return aps_.size(); }
    std::size_t total_antennas() const noexcept { return total_antennas_; }

private:
    DeploymentKind kind_;
    std::vector<AccessPoint> aps_;
    std::size_t total_antennas_ = 0;
};

/// True when every AP lies inside (or on) the hall footprint at ap_height.
bool fits_hall(const DeploymentLayout& layout, const HallGeometry& hall, double tol = 1e-9);

/// One AP with `antennas` elements at the hall center.
DeploymentLayout make_centralized(const HallGeometry& hall, std::size_t antennas);

/// sqrt(Q) x sqrt(Q) ceiling APs at cell centers, row-major (x fastest).
DeploymentLayout make_grid(const HallGeometry& hall, std::size_t ap_count, std::size_t antennas_per_ap);

/// Q APs along the perimeter at arc lengths (q - 0.5) * P / Q, counter-clockwise
/// from corner (0, 0).
DeploymentLayout make_radio_stripe(const HallGeometry& hall, std::size_t ap_count,
                                   std::size_t antennas_per_ap);

/// Device at (0.55, 0.75) of the hall footprint.
Point3 typical_position(const HallGeometry& hall);

/// Position of lowest expected gain: corner (0, 0) for centralized and grid,
/// hall center for radio stripes.
Point3 worst_case_position(DeploymentKind kind, const HallGeometry& hall);

double distance_3d(const Point3& a, const Point3& b) noexcept;

}  // namespace macrodiv
