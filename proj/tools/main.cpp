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
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

#include "cli_app.hpp"
#include "macrodiv/macrodiv.h"

namespace {

using macrodiv::cli::Options;

const char* category(md_status status) {
    switch (status) {
        case MD_ERR_CONFIG: return "config";
        case MD_ERR_NUMERIC: return "numeric";
        case MD_ERR_IO: return "io";
        default: return "internal";
    }
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// Thrown to unwind with a status already recorded by the library.
struct Failure {
    md_status status;
    std::string message;
};

void check(md_status status) {
    if (status != MD_OK) throw Failure{status, md_last_error()};
}

struct StringDeleter {
    void operator()(char* s) const { md_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ConfigDeleter {
    void operator()(md_config* c) const { md_config_free(c); }
};
struct ReportDeleter {
    void operator()(md_report* r) const { md_report_free(r); }
};

void set(md_config* cfg, const char* key, const std::string& json_value) {
    check(md_config_set(cfg, key, json_value.c_str()));
}

std::unique_ptr<md_config, ConfigDeleter> resolve_config(const Options& opt) {
    md_config* raw = nullptr;
    check(opt.config_path.empty() ? md_config_load("", &raw) : md_config_load_file(opt.config_path.c_str(), &raw));
    std::unique_ptr<md_config, ConfigDeleter> cfg(raw);

    // `subset` defaults to the TD grid unless a deployment was chosen.
    if (opt.subcommand == "subset" && !opt.deployment && !md_config_has_key(cfg.get(), "deployment")) {
        set(cfg.get(), "deployment", "\"grid\"");
    }
    if (opt.deployment) set(cfg.get(), "deployment", "\"" + *opt.deployment + "\"");
    // A Q or S given alone re-derives the other from M.
    if (opt.ap_count && !opt.antennas_per_ap) set(cfg.get(), "S", "null");
    if (opt.antennas_per_ap && !opt.ap_count) set(cfg.get(), "Q", "null");
    if (opt.ap_count) set(cfg.get(), "Q", std::to_string(*opt.ap_count));
    if (opt.antennas_per_ap) set(cfg.get(), "S", std::to_string(*opt.antennas_per_ap));
    if (opt.position) set(cfg.get(), "position", "\"" + json_escape(*opt.position) + "\"");
    if (opt.seed) set(cfg.get(), "seed", std::to_string(*opt.seed));
    if (opt.trials) set(cfg.get(), "trials", std::to_string(*opt.trials));
    if (opt.cardinalities) set(cfg.get(), "cardinalities", "[" + *opt.cardinalities + "]");
    if (opt.subcommand == "subset" && !opt.cardinalities && !md_config_has_key(cfg.get(), "cardinalities")) {
        set(cfg.get(), "cardinalities", "[1,4,8,16]");
    }

    if (opt.verbose) {
        char* text = nullptr;
        check(md_config_to_json(cfg.get(), &text));
        OwnedString owned(text);
        std::fputs(owned.get(), stderr);
    }
    return cfg;
}

void write_file(const std::string& dir, const std::string& name, const char* text) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = std::filesystem::path(dir) / name;
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) throw Failure{MD_ERR_IO, "cannot open '" + path.string() + "' for writing"};
    const bool ok = std::fputs(text, f) >= 0;
    if (std::fclose(f) != 0 || !ok) throw Failure{MD_ERR_IO, "failed writing '" + path.string() + "'"};
}

void run(const Options& opt) {
    if (opt.subcommand == "reproduce") {
        const std::uint64_t seed = opt.seed.value_or(1);
        const std::uint64_t trials = opt.trials.value_or(1'000'000);
        char* summary = nullptr;
        check(md_reproduce(seed, trials, opt.threads, opt.out_dir.c_str(), &summary));
        OwnedString owned(summary);
        std::fputs(owned.get(), stdout);
        return;
    }

    auto cfg = resolve_config(opt);
    if (opt.subcommand == "layout") {
        char* text = nullptr;
        check(md_layout_csv(cfg.get(), &text));
        OwnedString owned(text);
        write_file(opt.out_dir, "layout.csv", owned.get());
        std::fputs(owned.get(), stdout);
    } else if (opt.subcommand == "closed-form") {
        double linear = 0.0;
        double db = 0.0;
        double cv = 0.0;
        check(md_closed_form(cfg.get(), &linear, &db, &cv));
        char* text = nullptr;
        check(md_closed_form_csv(cfg.get(), &text));
        OwnedString owned(text);
        write_file(opt.out_dir, "closed_form.csv", owned.get());
        std::printf("E{|g|^2} = %.4f dB (%.6e linear), analytic cv = %.4f\n", db, linear, cv);
    } else {
        md_report* raw = nullptr;
        check(md_run_scenario(cfg.get(), opt.threads, &raw));
        std::unique_ptr<md_report, ReportDeleter> report(raw);
        check(md_report_write(report.get(), opt.out_dir.c_str()));
        char* text = nullptr;
        check(md_report_summary(report.get(), &text));
        OwnedString owned(text);
        std::fputs(owned.get(), stdout);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"macrodiv", "macrodiv"};
    Options opt;
    macrodiv::cli::configure(app, opt);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "{\"error\":\"config\",\"message\":\"%s\"}\n", json_escape(e.what()).c_str());
        return MD_ERR_CONFIG;
    }

    try {
        run(opt);
    } catch (const Failure& f) {
        std::fprintf(stderr, "{\"error\":\"%s\",\"message\":\"%s\"}\n", category(f.status),
                     json_escape(f.message).c_str());
        return static_cast<int>(f.status);
    }
    return 0;
}
