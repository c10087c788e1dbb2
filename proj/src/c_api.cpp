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
#include "macrodiv/macrodiv.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "macrodiv/error.hpp"
#include "macrodiv/experiment.hpp"

struct md_config {
    nlohmann::json overrides = nlohmann::json::object();
    macrodiv::ScenarioConfig resolved;
};

struct md_report {
    macrodiv::ScenarioReport report;
};

namespace {

thread_local std::string last_error;

md_status status_of(macrodiv::ErrorKind kind) {
    switch (kind) {
        case macrodiv::ErrorKind::Config: return MD_ERR_CONFIG;
        case macrodiv::ErrorKind::Numeric: return MD_ERR_NUMERIC;
        case macrodiv::ErrorKind::Io: return MD_ERR_IO;
    }
    return MD_ERR_INTERNAL;
}

template <class Fn>
md_status guarded(Fn&& fn) {
    try {
        last_error.clear();
        fn();
        return MD_OK;
    } catch (const macrodiv::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return MD_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return MD_ERR_INTERNAL;
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (!p) macrodiv::throw_config(fmt::format("{} must not be null", what));
}

md_config* make_config(nlohmann::json doc) {
    auto cfg = std::make_unique<md_config>();
    cfg->resolved = macrodiv::load_config(doc);
    cfg->overrides = std::move(doc);
    return cfg.release();
}

nlohmann::json parse_document(const std::string& text) {
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return nlohmann::json::object();
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        macrodiv::throw_config(fmt::format("config is not valid JSON: {}", e.what()));
    }
}

std::string summary_text(const macrodiv::ScenarioReport& r) {
    using macrodiv::format_db;
    const auto& mc = r.monte_carlo;
    std::string out = fmt::format("{} @ {}: closed-form {} dB, Monte Carlo mean {} dB", deployment_label(r.config.deployment),
                                  position_label(r.config.position), format_db(macrodiv::to_db(r.analytic.mean)),
                                  format_db(mc.mean_db()));
    const auto sdb = mc.stddev_db();
    out += sdb ? fmt::format(", std {} dB, cv {:.4f} (analytic {:.4f}), n={}\n", format_db(*sdb), *mc.cv,
                             r.analytic.cv(), mc.n)
               : fmt::format(", std undefined, n={}\n", mc.n);
    for (const auto& s : r.subsets) {
        out += fmt::format("  k={}: mean {} dB, ratio {:.5f}\n", s.cardinality, format_db(s.stats.mean_db()), s.ratio);
    }
    for (const auto& w : r.warnings) out += "warning: " + w + "\n";
    return out;
}

}  // namespace

extern "C" {

const char* md_version(void) { return "0.1.0"; }

const char* md_last_error(void) { return last_error.c_str(); }

void md_string_free(char* s) { std::free(s); }

md_status md_config_load(const char* text, md_config** out) {
    return guarded([&] {
        require(out, "out");
        *out = make_config(parse_document(text ? text : ""));
    });
}

md_status md_config_load_file(const char* path, md_config** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        std::ifstream in(path, std::ios::binary);
        if (!in) macrodiv::throw_io(fmt::format("cannot read config file '{}'", path));
        std::ostringstream buffer;
        buffer << in.rdbuf();
        *out = make_config(parse_document(buffer.str()));
    });
}

void md_config_free(md_config* config) { delete config; }

md_status md_config_set(md_config* config, const char* key, const char* json_value) {
    return guarded([&] {
        require(config, "config");
        require(key, "key");
        require(json_value, "value");
        nlohmann::json value;
        try {
            value = nlohmann::json::parse(json_value);
        } catch (const nlohmann::json::parse_error&) {
            value = std::string(json_value);
        }
        nlohmann::json candidate = config->overrides;
        if (value.is_null()) {
            candidate.erase(key);
        } else {
            candidate[key] = std::move(value);
        }
        config->resolved = macrodiv::load_config(candidate);
        config->overrides = std::move(candidate);
    });
}

int md_config_has_key(const md_config* config, const char* key) {
    if (!config || !key) return 0;
    return config->overrides.contains(key) ? 1 : 0;
}

md_status md_config_to_json(const md_config* config, char** out) {
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        *out = duplicate(macrodiv::config_to_json(config->resolved).dump(2) + "\n");
    });
}

md_status md_layout_csv(const md_config* config, char** out) {
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        const auto layout = macrodiv::build_layout(config->resolved);
        std::string text = "x,y,z,S\n";
        for (const auto& ap : layout.aps()) {
            text += fmt::format("{:.4f},{:.4f},{:.4f},{}\n", ap.position.x, ap.position.y, ap.position.z, ap.antennas);
        }
        *out = duplicate(text);
    });
}

md_status md_closed_form(const md_config* config, double* mean_linear, double* mean_db, double* cv) {
    return guarded([&] {
        require(config, "config");
        const auto& c = config->resolved;
        const auto m = macrodiv::second_moment_gain(c.channel, macrodiv::build_layout(c), macrodiv::resolve_position(c));
        if (mean_linear) *mean_linear = m.mean;
        if (mean_db) *mean_db = macrodiv::to_db(m.mean);
        if (cv) *cv = m.cv();
    });
}

md_status md_closed_form_csv(const md_config* config, char** out) {
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        const auto& c = config->resolved;
        const auto expr =
            macrodiv::expected_gain_distributed(c.channel, macrodiv::build_layout(c), macrodiv::resolve_position(c));
        std::string text = "ap,distance_m,antennas,contribution_linear,contribution_db\n";
        for (std::size_t i = 0; i < expr.terms.size(); ++i) {
            const auto& t = expr.terms[i];
            text += fmt::format("{},{:.4f},{},{:.10e},{}\n", i + 1, t.distance_m, t.antennas, t.contribution,
                                macrodiv::format_db(macrodiv::to_db(t.contribution)));
        }
        *out = duplicate(text);
    });
}

md_status md_run_scenario(const md_config* config, unsigned threads, md_report** out) {
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        auto report = std::make_unique<md_report>();
        report->report = macrodiv::run_scenario(config->resolved, threads);
        *out = report.release();
    });
}

void md_report_free(md_report* report) { delete report; }

md_status md_report_json(const md_report* report, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = duplicate(macrodiv::report_to_json(report->report).dump(2) + "\n");
    });
}

md_status md_report_summary(const md_report* report, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = duplicate(summary_text(report->report));
    });
}

md_status md_report_write(const md_report* report, const char* dir) {
    return guarded([&] {
        require(report, "report");
        require(dir, "dir");
        macrodiv::write_report(report->report, dir);
    });
}

md_status md_reproduce(uint64_t seed, uint64_t trials, unsigned threads, const char* dir, char** summary) {
    return guarded([&] {
        require(dir, "dir");
        if (trials == 0) macrodiv::throw_config("trials must be >= 1");
        const auto bundle = macrodiv::reproduce_all({seed, trials, threads});
        const auto files = macrodiv::write_bundle(bundle, dir);
        if (summary) {
            std::string text;
            for (const auto* table : {&bundle.table_typical, &bundle.table_worst}) {
                for (const auto& row : *table) {
                    text += fmt::format("{:<18} {:<8} mean {} dB  cv {}\n", row.deployment, row.position,
                                        macrodiv::format_db(row.stats.mean_db()),
                                        row.stats.cv ? fmt::format("{:.4f}", *row.stats.cv) : "undefined");
                }
            }
            for (const auto& f : files) text += "wrote " + f.string() + "\n";
            *summary = duplicate(text);
        }
    });
}

}  // extern "C"
