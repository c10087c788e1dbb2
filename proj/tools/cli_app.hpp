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
#include <optional>
#include <string>

#include "CLI11.hpp"

namespace macrodiv::cli {

struct Options {
    std::string subcommand;
    std::string config_path;
    std::string out_dir = "results";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> deployment;
    std::optional<std::uint64_t> ap_count;
    std::optional<std::uint64_t> antennas_per_ap;
    std::optional<std::string> position;
    std::optional<std::string> cardinalities;
    unsigned threads = 0;
    bool verbose = false;
};

inline constexpr const char* kSubcommands[] = {"layout", "closed-form", "simulate", "subset", "reproduce"};

/// Builds the argument table. Flags are accepted before or after the
/// subcommand.
inline void configure(CLI::App& app, Options& opt) {
    app.description(
        "Macro-diversity and signal-strength variability of centralized, grid and radio-stripe\n"
        "deployments in an indoor factory hall.\n"
        "Precedence: command-line flags > --config file > built-in reference defaults.");
    app.require_subcommand(1, 1);
    app.fallthrough();

    app.add_option("--config", opt.config_path, "Scenario config file (flat JSON object)");
    app.add_option("--out", opt.out_dir, "Output directory, created if absent")->capture_default_str();
    app.add_option("--seed", opt.seed, "Random seed (U64)");
    app.add_option("--trials", opt.trials, "Monte Carlo trials N")->check(CLI::PositiveNumber);
    app.add_option("--deployment", opt.deployment, "Deployment scheme")
        ->check(CLI::IsMember({"centralized", "grid", "stripe"}));
    app.add_option("--Q", opt.ap_count, "Number of APs");
    app.add_option("--S", opt.antennas_per_ap, "Antennas per AP");
    app.add_option("--position", opt.position, "Device position: typical, worst or X,Y in meters");
    app.add_option("--cardinalities", opt.cardinalities, "Comma-separated subset sizes, e.g. 1,4,8,16");
    app.add_option("--threads", opt.threads, "Worker threads (0 = all cores); results do not depend on it")
        ->capture_default_str();
    app.add_flag("--verbose", opt.verbose, "Echo the resolved config to stderr");

    const std::pair<const char*, const char*> commands[] = {
        {"layout", "Print AP coordinates (x,y,z,S) and write layout.csv"},
        {"closed-form", "Print the closed-form expected gain and write closed_form.csv"},
        {"simulate", "Run one scenario and write report.json, summary.csv, ccdf.csv"},
        {"subset", "Run an AP-subset sweep (default k = 1,4,8,16 on the TD grid)"},
        {"reproduce", "Write tableI-IV.csv and fig2a/2b/3a/3b.csv for the reference study"},
    };
    for (const auto& [name, help] : commands) {
        app.add_subcommand(name, help)->callback([&opt, name = std::string(name)] { opt.subcommand = name; });
    }
}

}  // namespace macrodiv::cli
