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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "macrodiv/channel.hpp"
#include "macrodiv/closedform.hpp"
#include "macrodiv/geometry.hpp"
#include "macrodiv/stats.hpp"

namespace macrodiv {

enum class PositionKind { Typical, Worst, Explicit };

struct PositionSpec {
    PositionKind kind = PositionKind::Typical;
    double x = 0.0;  // used for Explicit only
    double y = 0.0;
};

/// Resolved deployment: total_antennas == ap_count * antennas_per_ap.
struct DeploymentSpec {
    DeploymentKind kind = DeploymentKind::Centralized;
    std::size_t ap_count = 1;
    std::size_t antennas_per_ap = 64;
    std::size_t total_antennas = 64;
};

/// Everything needed to rerun a scenario bit for bit. Defaults reproduce the
/// reference setup: 100 m x 100 m hall, APs at 6 m, device at 1.5 m,
/// 3.5 GHz, exponent 3.19, 7.56 dB shadowing, M = 64, 10^6 trials.
struct ScenarioConfig {
    HallGeometry hall;
    ChannelModelParams channel;
    DeploymentSpec deployment;
    PositionSpec position;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    std::vector<std::size_t> cardinalities;       // empty: no subset sweep
    std::vector<double> ccdf_thresholds_db;       // empty: default grid
    SelectionRule selection = SelectionRule::NearestDistance;
};

/// Config documents are flat JSON objects. Unknown keys, wrong types and
/// inconsistent antenna counts raise Error(Config) naming the field. An empty
/// or whitespace-only document yields the defaults.
ScenarioConfig load_config(std::string_view text);
ScenarioConfig load_config(const nlohmann::json& doc);
inline ScenarioConfig load_config(const char* text) { return load_config(std::string_view(text)); }
inline ScenarioConfig load_config(const std::string& text) { return load_config(std::string_view(text)); }

/// Canonical document with every field resolved; load_config(dump) == config.
nlohmann::ordered_json config_to_json(const ScenarioConfig& config);

/// Keys accepted by load_config, in canonical order.
const std::vector<std::string>& config_keys();

DeploymentLayout build_layout(const ScenarioConfig& config);
Point3 resolve_position(const ScenarioConfig& config);

/// Row label used in table CSVs ("Centralized mMIMO", "TD Radio Stripes", ...).
std::string deployment_label(const DeploymentSpec& deployment);
std::string position_label(const PositionSpec& position);

struct MonteCarloSummary {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    std::optional<double> stddev;
    std::optional<double> cv;
    std::optional<double> mean_se;
    std::optional<double> cv_se;

    static MonteCarloSummary from(const GainSampleSet& set);
    double mean_db() const;
    std::optional<double> stddev_db() const;
};

struct SubsetSummary {
    std::size_t cardinality = 0;
    MonteCarloSummary stats;
    double ratio = 0.0;
};

struct ScenarioReport {
    ScenarioConfig config;
    std::vector<AccessPoint> aps;
    Point3 device;
    GainExpression closed_form;
    GainMoments analytic;
    MonteCarloSummary monte_carlo;
    CcdfTable ccdf;
    std::vector<SubsetSummary> subsets;
    std::vector<std::string> warnings;
};

/// Closed form, Monte Carlo statistics, CCDF, and (if configured) the
/// subset sweep. Deterministic for a fixed config; the thread count only
/// affects speed.
ScenarioReport run_scenario(const ScenarioConfig& config, unsigned threads = 0);

/// Full report as JSON, with the resolved config echoed under "config".
nlohmann::ordered_json report_to_json(const ScenarioReport& report);

struct TableRow {
    std::string deployment;
    std::string position;
    MonteCarloSummary stats;
};

struct SubsetRow {
    std::size_t k = 0;
    MonteCarloSummary stats;
    double ratio = 0.0;
};

struct FigureRow {
    double threshold_db = 0.0;
    double probability = 0.0;
    std::string series;
};

struct ReproduceOptions {
    std::uint64_t seed = 1;
    std::uint64_t trials = 1'000'000;
    unsigned threads = 0;
};

/// The four tables and four CCDF figures of the reference study.
struct ReproductionBundle {
    std::vector<ScenarioReport> reports;
    std::vector<TableRow> table_typical;        // tableI.csv
    std::vector<TableRow> table_worst;          // tableII.csv
    std::vector<SubsetRow> subsets_typical;     // tableIII.csv
    std::vector<SubsetRow> subsets_worst;       // tableIV.csv
    std::vector<FigureRow> fig_typical;         // fig2a.csv
    std::vector<FigureRow> fig_worst;           // fig2b.csv
    std::vector<FigureRow> fig_subsets_typical; // fig3a.csv
    std::vector<FigureRow> fig_subsets_worst;   // fig3b.csv
};

/// The five reference deployments (centralized, PD/TD grid, PD/TD stripe)
/// with all other fields at their defaults.
std::vector<ScenarioConfig> reference_deployments();

ReproductionBundle reproduce_all(const ReproduceOptions& options);

/// CSV writers; each throws Error(Io) when the file cannot be written.
void write_table_csv(const std::filesystem::path& path, const std::vector<TableRow>& rows);
void write_subset_csv(const std::filesystem::path& path, const std::vector<SubsetRow>& rows);
void write_figure_csv(const std::filesystem::path& path, const std::vector<FigureRow>& rows);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Writes tableI.csv ... tableIV.csv and fig2a.csv ... fig3b.csv into `dir`,
/// creating it if needed. Returns the written paths.
std::vector<std::filesystem::path> write_bundle(const ReproductionBundle& bundle,
                                                const std::filesystem::path& dir);

/// Report files for a single scenario: report.json, summary.csv, ccdf.csv
/// and, when a sweep ran, subsets.csv.
std::vector<std::filesystem::path> write_report(const ScenarioReport& report, const std::filesystem::path& dir);

/// 4-decimal dB formatting used in every output file.
std::string format_db(double db);

}  // namespace macrodiv
