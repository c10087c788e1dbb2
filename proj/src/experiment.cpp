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
#include "macrodiv/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include <fmt/format.h>

#include "macrodiv/error.hpp"

namespace macrodiv {

namespace {

using json = nlohmann::json;

const json* find(const json& doc, const char* key) {
    const auto it = doc.find(key);
    return it == doc.end() ? nullptr : &*it;
}

double get_number(const json& doc, const char* key, double fallback) {
    const json* v = find(doc, key);
    if (!v) return fallback;
    if (!v->is_number()) throw_config(fmt::format("config field '{}' must be a number", key));
    const double x = v->get<double>();
    if (!std::isfinite(x)) throw_config(fmt::format("config field '{}' must be finite", key));
    return x;
}

std::uint64_t to_count(const json& v, const char* key) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) {
        throw_config(fmt::format("config field '{}' must be non-negative (got {})", key, v.get<std::int64_t>()));
    }
    throw_config(fmt::format("config field '{}' must be a non-negative integer", key));
}

std::optional<std::uint64_t> get_count(const json& doc, const char* key) {
    const json* v = find(doc, key);
    if (!v) return std::nullopt;
    return to_count(*v, key);
}

std::string get_string(const json& doc, const char* key, std::string fallback) {
    const json* v = find(doc, key);
    if (!v) return fallback;
    if (!v->is_string()) throw_config(fmt::format("config field '{}' must be a string", key));
    return v->get<std::string>();
}

PositionSpec parse_position(const json& v, const HallGeometry& hall) {
    PositionSpec spec;
    double x = 0.0;
    double y = 0.0;
    if (v.is_string()) {
        const auto text = v.get<std::string>();
        if (text == "typical") return spec;
        if (text == "worst") {
            spec.kind = PositionKind::Worst;
            return spec;
        }
        const auto comma = text.find(',');
        if (comma == std::string::npos) {
            throw_config(fmt::format("config field 'position' must be typical, worst or X,Y (got '{}')", text));
        }
        try {
            std::size_t used_x = 0;
            std::size_t used_y = 0;
            const std::string xs = text.substr(0, comma);
            const std::string ys = text.substr(comma + 1);
            x = std::stod(xs, &used_x);
            y = std::stod(ys, &used_y);
            if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw_config(fmt::format("config field 'position' has malformed coordinates '{}'", text));
        }
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        x = v[0].get<double>();
        y = v[1].get<double>();
    } else {
        throw_config("config field 'position' must be typical, worst, \"X,Y\" or [X, Y]");
    }
    if (!std::isfinite(x) || !std::isfinite(y) || x < 0.0 || y < 0.0 || x > hall.length_x || y > hall.length_y) {
        throw_config(fmt::format("config field 'position' ({}, {}) lies outside the hall", x, y));
    }
    spec.kind = PositionKind::Explicit;
    spec.x = x;
    spec.y = y;
    return spec;
}

DeploymentSpec resolve_deployment(DeploymentKind kind, std::optional<std::uint64_t> q,
                                  std::optional<std::uint64_t> s, std::optional<std::uint64_t> m) {
    DeploymentSpec d;
    d.kind = kind;
    if (q && *q == 0) throw_config("config field 'Q' must be >= 1");
    if (s && *s == 0) throw_config("config field 'S' must be >= 1");
    if (m && *m == 0) throw_config("config field 'M' must be >= 1");

    if (kind == DeploymentKind::Centralized && !q) q = 1;
    if (q && s) {
        if (m && *m != *q * *s) {
            throw_config(fmt::format("integrality: M={} does not equal Q*S={}*{}", *m, *q, *s));
        }
        m = *q * *s;
    } else {
        if (!m) m = 64;
        if (q) {
            if (*m % *q != 0) throw_config(fmt::format("integrality: M={} is not divisible by Q={}", *m, *q));
            s = *m / *q;
        } else if (s) {
            if (*m % *s != 0) throw_config(fmt::format("integrality: M={} is not divisible by S={}", *m, *s));
            q = *m / *s;
        } else {
            q = *m;
            s = 1;
        }
    }
    if (kind == DeploymentKind::Centralized && *q != 1) {
        throw_config(fmt::format("config field 'Q': centralized deployment has one AP (got Q={}, S={})", *q, *s));
    }
    d.ap_count = *q;
    d.antennas_per_ap = *s;
    d.total_antennas = *m;
    return d;
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "hall_dx", "hall_dy",  "h_ap",   "h_mtd",  "fc_ghz",        "eta",
        "sigma_s_db", "deployment", "Q", "S", "M", "position", "trials", "seed",
        "cardinalities", "ccdf_thresholds_db", "selection"};
    return keys;
}

ScenarioConfig load_config(std::string_view text) {
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) {
        return load_config(json::object());
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw_config(fmt::format("config is not valid JSON: {}", e.what()));
    }
    return load_config(doc);
}

ScenarioConfig load_config(const json& doc) {
    if (!doc.is_object()) throw_config("config document must be a JSON object");
    const auto& keys = config_keys();
    for (const auto& item : doc.items()) {
        if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
            throw_config(fmt::format("unknown config field '{}'", item.key()));
        }
    }

    ScenarioConfig cfg;
    cfg.hall.length_x = get_number(doc, "hall_dx", cfg.hall.length_x);
    cfg.hall.length_y = get_number(doc, "hall_dy", cfg.hall.length_y);
    cfg.hall.ap_height = get_number(doc, "h_ap", cfg.hall.ap_height);
    cfg.hall.device_height = get_number(doc, "h_mtd", cfg.hall.device_height);
    cfg.hall.validate();

    cfg.channel.carrier_ghz = get_number(doc, "fc_ghz", cfg.channel.carrier_ghz);
    cfg.channel.path_loss_exponent = get_number(doc, "eta", cfg.channel.path_loss_exponent);
    cfg.channel.shadowing_db = get_number(doc, "sigma_s_db", cfg.channel.shadowing_db);
    cfg.channel.validate();

    const std::string kind_text = get_string(doc, "deployment", "centralized");
    const auto kind = parse_deployment_kind(kind_text);
    if (!kind) {
        throw_config(fmt::format("config field 'deployment' must be centralized, grid or stripe (got '{}')", kind_text));
    }
    cfg.deployment = resolve_deployment(*kind, get_count(doc, "Q"), get_count(doc, "S"), get_count(doc, "M"));

    if (const json* p = find(doc, "position")) cfg.position = parse_position(*p, cfg.hall);

    if (const auto n = get_count(doc, "trials")) {
        if (*n == 0) throw_config("config field 'trials' must be >= 1");
        cfg.trials = *n;
    }
    if (const auto seed = get_count(doc, "seed")) cfg.seed = *seed;

    if (const json* ks = find(doc, "cardinalities")) {
        if (!ks->is_array()) throw_config("config field 'cardinalities' must be an array");
        for (const auto& k : *ks) {
            const auto value = to_count(k, "cardinalities");
            if (value < 1 || value > cfg.deployment.ap_count) {
                throw_config(fmt::format("config field 'cardinalities': {} outside [1, {}]", value,
                                         cfg.deployment.ap_count));
            }
            cfg.cardinalities.push_back(static_cast<std::size_t>(value));
        }
    }
    if (const json* ts = find(doc, "ccdf_thresholds_db")) {
        if (!ts->is_array()) throw_config("config field 'ccdf_thresholds_db' must be an array");
        for (const auto& t : *ts) {
            if (!t.is_number() || !std::isfinite(t.get<double>())) {
                throw_config("config field 'ccdf_thresholds_db' must hold finite numbers");
            }
            cfg.ccdf_thresholds_db.push_back(t.get<double>());
        }
    }
    const std::string rule = get_string(doc, "selection", std::string(to_string(cfg.selection)));
    const auto parsed_rule = parse_selection_rule(rule);
    if (!parsed_rule) {
        throw_config(fmt::format("config field 'selection' must be nearest or largest_beta (got '{}')", rule));
    }
    cfg.selection = *parsed_rule;

    // Surfaces geometry errors (non-square grid, short stripe) at load time.
    (void)build_layout(cfg);
    return cfg;
}

nlohmann::ordered_json config_to_json(const ScenarioConfig& c) {
    nlohmann::ordered_json doc;
    doc["hall_dx"] = c.hall.length_x;
    doc["hall_dy"] = c.hall.length_y;
    doc["h_ap"] = c.hall.ap_height;
    doc["h_mtd"] = c.hall.device_height;
    doc["fc_ghz"] = c.channel.carrier_ghz;
    doc["eta"] = c.channel.path_loss_exponent;
    doc["sigma_s_db"] = c.channel.shadowing_db;
    doc["deployment"] = std::string(to_string(c.deployment.kind));
    doc["Q"] = c.deployment.ap_count;
    doc["S"] = c.deployment.antennas_per_ap;
    doc["M"] = c.deployment.total_antennas;
    switch (c.position.kind) {
        case PositionKind::Typical: doc["position"] = "typical"; break;
        case PositionKind::Worst: doc["position"] = "worst"; break;
        case PositionKind::Explicit: doc["position"] = {c.position.x, c.position.y}; break;
    }
    doc["trials"] = c.trials;
    doc["seed"] = c.seed;
    doc["cardinalities"] = c.cardinalities;
    doc["ccdf_thresholds_db"] = c.ccdf_thresholds_db;
    doc["selection"] = std::string(to_string(c.selection));
    return doc;
}

DeploymentLayout build_layout(const ScenarioConfig& c) {
    const auto& d = c.deployment;
    switch (d.kind) {
        case DeploymentKind::Centralized: return make_centralized(c.hall, d.total_antennas);
        case DeploymentKind::Grid: return make_grid(c.hall, d.ap_count, d.antennas_per_ap);
        case DeploymentKind::RadioStripe: return make_radio_stripe(c.hall, d.ap_count, d.antennas_per_ap);
    }
    throw_config("unknown deployment kind");
}

Point3 resolve_position(const ScenarioConfig& c) {
    switch (c.position.kind) {
        case PositionKind::Typical: return typical_position(c.hall);
        case PositionKind::Worst: return worst_case_position(c.deployment.kind, c.hall);
        case PositionKind::Explicit: return {c.position.x, c.position.y, c.hall.device_height};
    }
    return typical_position(c.hall);
}

std::string deployment_label(const DeploymentSpec& d) {
    switch (d.kind) {
        case DeploymentKind::Centralized: return "Centralized mMIMO";
        case DeploymentKind::Grid: return d.antennas_per_ap > 1 ? "PD mMIMO" : "TD mMIMO";
        case DeploymentKind::RadioStripe: return d.antennas_per_ap > 1 ? "PD Radio Stripes" : "TD Radio Stripes";
    }
    return "unknown";
}

std::string position_label(const PositionSpec& p) {
    switch (p.kind) {
        case PositionKind::Typical: return "typical";
        case PositionKind::Worst: return "worst";
        case PositionKind::Explicit: return fmt::format("x={} y={}", p.x, p.y);
    }
    return "unknown";
}

MonteCarloSummary MonteCarloSummary::from(const GainSampleSet& set) {
    MonteCarloSummary s;
    s.n = set.n();
    s.seed = set.seed;
    s.mean = set.mean;
    s.stddev = set.stddev;
    s.cv = set.cv;
    if (set.n() >= 2) {
        s.mean_se = mean_standard_error(set);
        s.cv_se = cv_standard_error(set);
    }
    return s;
}

double MonteCarloSummary::mean_db() const { return to_db(mean); }

std::optional<double> MonteCarloSummary::stddev_db() const {
    if (!stddev || *stddev <= 0.0) return std::nullopt;
    return to_db(*stddev);
}

namespace {

struct ScenarioRun {
    ScenarioReport report;
    GainSampleSet full;
    std::vector<GainSampleSet> subsets;  // parallel to report.subsets
};

double min_db(const GainSampleSet& set) {
    return to_db(*std::min_element(set.samples.begin(), set.samples.end()));
}

double max_db(const GainSampleSet& set) {
    return to_db(*std::max_element(set.samples.begin(), set.samples.end()));
}

ScenarioRun execute(const ScenarioConfig& cfg, unsigned threads) {
    ScenarioRun run;
    ScenarioReport& report = run.report;
    report.config = cfg;
    const DeploymentLayout layout = build_layout(cfg);
    report.aps.assign(layout.aps().begin(), layout.aps().end());
    report.device = resolve_position(cfg);
    report.closed_form = expected_gain_distributed(cfg.channel, layout, report.device);
    report.analytic = second_moment_gain(cfg.channel, layout, report.device);

    const ChannelSampler sampler(layout, report.device, cfg.channel);
    for (std::size_t q = 0; q < sampler.ap_count(); ++q) {
        if (sampler.distances()[q] < 1.0) {
            report.warnings.push_back(fmt::format(
                "AP {} is {:.4f} m from the device; the path-loss model is not validated below 1 m", q + 1,
                sampler.distances()[q]));
        }
    }

    const RunOptions options{cfg.trials, cfg.seed, threads};
    if (cfg.cardinalities.empty()) {
        run.full = monte_carlo_gains(layout, report.device, cfg.channel, options);
    } else {
        std::vector<std::size_t> ks = cfg.cardinalities;
        const std::size_t q = layout.ap_count();
        const bool has_full = std::find(ks.begin(), ks.end(), q) != ks.end();
        if (!has_full) ks.push_back(q);
        auto results = subset_sweep(layout, report.device, cfg.channel, ks, cfg.selection, options);
        for (std::size_t i = 0; i < cfg.cardinalities.size(); ++i) {
            report.subsets.push_back(
                {results[i].cardinality, MonteCarloSummary::from(results[i].gains), results[i].ratio});
        }
        const auto full_it = std::find_if(results.begin(), results.end(),
                                          [&](const SubsetResult& r) { return r.cardinality == q; });
        run.full = full_it->gains;
        for (std::size_t i = 0; i < cfg.cardinalities.size(); ++i) run.subsets.push_back(std::move(results[i].gains));
    }
    report.monte_carlo = MonteCarloSummary::from(run.full);

    const std::vector<double> thresholds = cfg.ccdf_thresholds_db.empty()
                                               ? default_threshold_grid(min_db(run.full), max_db(run.full))
                                               : cfg.ccdf_thresholds_db;
    report.ccdf = empirical_ccdf(run.full, thresholds);
    return run;
}

std::vector<FigureRow> figure_rows(const std::vector<const GainSampleSet*>& sets,
                                   const std::vector<std::string>& labels) {
    double lo = min_db(*sets.front());
    double hi = max_db(*sets.front());
    for (const auto* s : sets) {
        lo = std::min(lo, min_db(*s));
        hi = std::max(hi, max_db(*s));
    }
    const auto grid = default_threshold_grid(lo, hi);
    std::vector<FigureRow> rows;
    rows.reserve(grid.size() * sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (const auto& p : empirical_ccdf(*sets[i], grid).points) rows.push_back({p.threshold_db, p.probability, labels[i]});
    }
    return rows;
}

std::string format_optional(const std::optional<double>& v, int decimals) {
    return v ? fmt::format("{:.{}f}", *v, decimals) : std::string("undefined");
}

class CsvFile {
public:
    explicit CsvFile(const std::filesystem::path& path) : path_(path), out_(path, std::ios::binary) {
        if (!out_) throw_io(fmt::format("cannot open '{}' for writing", path.string()));
    }
    void line(const std::string& text) { out_ << text << '\n'; }
    void close() {
        out_.close();
        if (!out_) throw_io(fmt::format("failed writing '{}'", path_.string()));
    }

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw_io(fmt::format("cannot create output directory '{}'", dir.string()));
    }
}

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

double round4(double x) { return std::stod(fmt::format("{:.4f}", x)); }

nlohmann::ordered_json summary_json(const MonteCarloSummary& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["seed"] = s.seed;
    j["mean_linear"] = s.mean;
    j["mean_db"] = round4(s.mean_db());
    j["std_linear"] = optional_json(s.stddev);
    const auto sdb = s.stddev_db();
    j["std_db"] = sdb ? nlohmann::ordered_json(round4(*sdb)) : nlohmann::ordered_json(nullptr);
    j["cv"] = optional_json(s.cv);
    j["mean_standard_error"] = optional_json(s.mean_se);
    j["cv_standard_error"] = optional_json(s.cv_se);
    if (!s.stddev) j["std_note"] = "undefined (single sample)";
    return j;
}

}  // namespace

ScenarioReport run_scenario(const ScenarioConfig& config, unsigned threads) {
    return execute(config, threads).report;
}

nlohmann::ordered_json report_to_json(const ScenarioReport& r) {
    nlohmann::ordered_json j;
    j["config"] = config_to_json(r.config);
    j["label"] = deployment_label(r.config.deployment);
    j["position_label"] = position_label(r.config.position);
    auto& aps = j["layout"] = nlohmann::ordered_json::array();
    for (const auto& ap : r.aps) {
        aps.push_back({{"x", ap.position.x}, {"y", ap.position.y}, {"z", ap.position.z}, {"S", ap.antennas}});
    }
    j["device"] = {{"x", r.device.x}, {"y", r.device.y}, {"z", r.device.z}};

    auto& cf = j["closed_form"];
    cf["mean_linear"] = r.analytic.mean;
    cf["mean_db"] = round4(to_db(r.analytic.mean));
    cf["std_linear"] = r.analytic.stddev();
    cf["std_db"] = round4(to_db(r.analytic.stddev()));
    cf["cv"] = r.analytic.cv();
    auto& terms = cf["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : r.closed_form.terms) {
        terms.push_back({{"distance_m", t.distance_m},
                         {"antennas", t.antennas},
                         {"contribution_linear", t.contribution},
                         {"contribution_db", round4(to_db(t.contribution))}});
    }

    j["monte_carlo"] = summary_json(r.monte_carlo);
    auto& subsets = j["subsets"] = nlohmann::ordered_json::array();
    for (const auto& s : r.subsets) {
        auto entry = summary_json(s.stats);
        entry["k"] = s.cardinality;
        entry["ratio"] = s.ratio;
        subsets.push_back(std::move(entry));
    }
    auto& ccdf = j["ccdf"] = nlohmann::ordered_json::array();
    for (const auto& p : r.ccdf.points) ccdf.push_back({p.threshold_db, p.probability});
    j["warnings"] = r.warnings;
    j["metadata"] = {{"generator", "macrodiv 0.1.0"},
                     {"rng", "xoshiro256** substream per trial index"},
                     {"subset_random_numbers", "common across cardinalities"}};
    return j;
}

std::vector<ScenarioConfig> reference_deployments() {
    std::vector<ScenarioConfig> out(5);
    out[0].deployment = {DeploymentKind::Centralized, 1, 64, 64};
    out[1].deployment = {DeploymentKind::Grid, 16, 4, 64};
    out[2].deployment = {DeploymentKind::Grid, 64, 1, 64};
    out[3].deployment = {DeploymentKind::RadioStripe, 16, 4, 64};
    out[4].deployment = {DeploymentKind::RadioStripe, 64, 1, 64};
    return out;
}

ReproductionBundle reproduce_all(const ReproduceOptions& options) {
    ReproductionBundle bundle;
    const std::vector<std::size_t> subset_ks = {1, 4, 8, 16};
    const std::vector<std::string> subset_labels = {"k=1", "k=4", "k=8", "k=16", "all"};

    for (const PositionKind where : {PositionKind::Typical, PositionKind::Worst}) {
        std::vector<ScenarioRun> runs;
        std::vector<const GainSampleSet*> sets;
        std::vector<std::string> labels;
        auto& table = where == PositionKind::Typical ? bundle.table_typical : bundle.table_worst;
        auto& subset_table = where == PositionKind::Typical ? bundle.subsets_typical : bundle.subsets_worst;
        for (ScenarioConfig cfg : reference_deployments()) {
            cfg.position.kind = where;
            cfg.seed = options.seed;
            cfg.trials = options.trials;
            // The TD grid run doubles as the subset sweep (k = Q is the full gain).
            if (cfg.deployment.kind == DeploymentKind::Grid && cfg.deployment.antennas_per_ap == 1) {
                cfg.cardinalities = subset_ks;
            }
            runs.push_back(execute(cfg, options.threads));
        }
        for (auto& run : runs) {
            const auto label = deployment_label(run.report.config.deployment);
            table.push_back({label, position_label(run.report.config.position), run.report.monte_carlo});
            sets.push_back(&run.full);
            labels.push_back(label);
        }
        (where == PositionKind::Typical ? bundle.fig_typical : bundle.fig_worst) = figure_rows(sets, labels);

        const auto td = std::find_if(runs.begin(), runs.end(), [](const ScenarioRun& r) {
            return !r.report.subsets.empty();
        });
        std::vector<const GainSampleSet*> subset_sets;
        for (std::size_t i = 0; i < td->report.subsets.size(); ++i) {
            const auto& s = td->report.subsets[i];
            subset_table.push_back({s.cardinality, s.stats, s.ratio});
            subset_sets.push_back(&td->subsets[i]);
        }
        subset_table.push_back({td->report.config.deployment.ap_count, td->report.monte_carlo, 1.0});
        subset_sets.push_back(&td->full);
        (where == PositionKind::Typical ? bundle.fig_subsets_typical : bundle.fig_subsets_worst) =
            figure_rows(subset_sets, subset_labels);

        for (auto& run : runs) bundle.reports.push_back(std::move(run.report));
    }
    return bundle;
}

std::string format_db(double db) { return fmt::format("{:.4f}", db); }

void write_table_csv(const std::filesystem::path& path, const std::vector<TableRow>& rows) {
    CsvFile csv(path);
    csv.line("deployment,position,mean_db,std_db,cv");
    for (const auto& r : rows) {
        csv.line(fmt::format("{},{},{},{},{}", r.deployment, r.position, format_db(r.stats.mean_db()),
                             format_optional(r.stats.stddev_db(), 4), format_optional(r.stats.cv, 4)));
    }
    csv.close();
}

void write_subset_csv(const std::filesystem::path& path, const std::vector<SubsetRow>& rows) {
    CsvFile csv(path);
    csv.line("k,mean_db,std_db,cv,ratio");
    for (const auto& r : rows) {
        csv.line(fmt::format("{},{},{},{},{:.5f}", r.k, format_db(r.stats.mean_db()),
                             format_optional(r.stats.stddev_db(), 4), format_optional(r.stats.cv, 4), r.ratio));
    }
    csv.close();
}

void write_figure_csv(const std::filesystem::path& path, const std::vector<FigureRow>& rows) {
    CsvFile csv(path);
    csv.line("threshold_db,ccdf_probability,series_label");
    for (const auto& r : rows) csv.line(fmt::format("{:.4f},{:.8f},{}", r.threshold_db, r.probability, r.series));
    csv.close();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_io(fmt::format("cannot open '{}' for writing", path.string()));
    out << text;
    out.close();
    if (!out) throw_io(fmt::format("failed writing '{}'", path.string()));
}

std::vector<std::filesystem::path> write_bundle(const ReproductionBundle& b, const std::filesystem::path& dir) {
    ensure_dir(dir);
    std::vector<std::filesystem::path> written = {dir / "tableI.csv",  dir / "tableII.csv", dir / "tableIII.csv",
                                                  dir / "tableIV.csv", dir / "fig2a.csv",   dir / "fig2b.csv",
                                                  dir / "fig3a.csv",   dir / "fig3b.csv"};
    write_table_csv(written[0], b.table_typical);
    write_table_csv(written[1], b.table_worst);
    write_subset_csv(written[2], b.subsets_typical);
    write_subset_csv(written[3], b.subsets_worst);
    write_figure_csv(written[4], b.fig_typical);
    write_figure_csv(written[5], b.fig_worst);
    write_figure_csv(written[6], b.fig_subsets_typical);
    write_figure_csv(written[7], b.fig_subsets_worst);
    return written;
}

std::vector<std::filesystem::path> write_report(const ScenarioReport& r, const std::filesystem::path& dir) {
    ensure_dir(dir);
    std::vector<std::filesystem::path> written;

    written.push_back(dir / "report.json");
    write_text_file(written.back(), report_to_json(r).dump(2) + "\n");

    written.push_back(dir / "summary.csv");
    write_table_csv(written.back(),
                    {{deployment_label(r.config.deployment), position_label(r.config.position), r.monte_carlo}});

    written.push_back(dir / "ccdf.csv");
    std::vector<FigureRow> rows;
    const auto label = deployment_label(r.config.deployment);
    for (const auto& p : r.ccdf.points) rows.push_back({p.threshold_db, p.probability, label});
    write_figure_csv(written.back(), rows);

    if (!r.subsets.empty()) {
        written.push_back(dir / "subsets.csv");
        std::vector<SubsetRow> subset_rows;
        for (const auto& s : r.subsets) subset_rows.push_back({s.cardinality, s.stats, s.ratio});
        write_subset_csv(written.back(), subset_rows);
    }
    return written;
}

}  // namespace macrodiv
