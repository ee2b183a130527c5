#include "misfit/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

namespace misfit {

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw ConfigError(key, "expected a number, got '" + text + "'");
    return value;
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError(key, "expected a non-negative integer, got '" + text + "'");
    return value;
}

std::uint64_t parse_count(const std::string& key, const std::string& text) {
    const auto v = parse_u64(key, text);
    if (v == 0) throw ConfigError(key, "must be at least 1");
    return v;
}

double parse_probability(const std::string& key, const std::string& text) {
    const double v = parse_double(key, text);
    if (v < 0.0 || v > 1.0) throw ConfigError(key, "must lie in [0, 1], got " + text);
    return v;
}

double parse_nonnegative(const std::string& key, const std::string& text) {
    const double v = parse_double(key, text);
    if (v < 0.0) throw ConfigError(key, "must be >= 0, got " + text);
    return v;
}

std::string parse_tax(const std::string& key, const std::string& text) {
    const auto& names = TaxPolicy::preset_names();
    if (std::find(names.begin(), names.end(), text) == names.end())
        throw ConfigError(key, "unknown tax schedule '" + text + "' (flat15, moderate, high, extra_high)");
    return text;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) items.push_back(trim(item));
    return items;
}

using Setter = std::function<void(ModelConfig&, const std::string& key, const std::string& value)>;

struct KeySpec {
    Setter set;
    bool static_model;
    bool dynamic_model;
};

const std::map<std::string, KeySpec>& model_keys() {
    static const std::map<std::string, KeySpec> keys{
        {"n_agents", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.economy.n_agents = parse_count(k, v);
             c.network.n = c.economy.n_agents;
         }, true, true}},
        {"n_periods", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             const auto n = parse_count(k, v);
             if (n > 1'000'000) throw ConfigError(k, "too many periods");
             c.economy.n_periods = static_cast<int>(n);
         }, true, true}},
        {"tax", {[](ModelConfig& c, const std::string& k, const std::string& v) { c.tax = parse_tax(k, v); },
                 true, true}},
        {"trad_mu", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.economy.trad_spec.mu = parse_double(k, v);
         }, true, true}},
        {"trad_sigma", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.economy.trad_spec.sigma = parse_nonnegative(k, v);
         }, true, true}},
        {"dig_mu", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.economy.dig_spec.mu = parse_double(k, v);
         }, true, true}},
        {"dig_sigma", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.economy.dig_spec.sigma = parse_nonnegative(k, v);
         }, true, true}},
        {"initial_valuation", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.economy.initial_valuation = parse_nonnegative(k, v);
         }, true, true}},
        {"bankruptcy_floor", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.economy.bankruptcy_floor = parse_nonnegative(k, v);
         }, true, true}},
        {"depreciation_periods", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             const auto n = parse_count(k, v);
             if (n > 1'000'000) throw ConfigError(k, "too many periods");
             c.economy.schedule = DepreciationSchedule{static_cast<int>(n)};
         }, true, true}},
        {"sigma_mode", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             if (v == "fixed") c.economy.sigma_mode.kind = SigmaMode::Kind::Fixed;
             else if (v == "half_normal") c.economy.sigma_mode.kind = SigmaMode::Kind::HalfNormalPerAgent;
             else throw ConfigError(k, "expected fixed or half_normal, got '" + v + "'");
         }, true, true}},
        {"sigma_scale", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.economy.sigma_mode.scale = parse_nonnegative(k, v);
         }, true, true}},
        {"trad_rate_mode", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             if (v == "fresh_draw") c.economy.trad_rate_mode = TraditionalRateMode::FreshDraw;
             else if (v == "fixed_mean") c.economy.trad_rate_mode = TraditionalRateMode::FixedMean;
             else throw ConfigError(k, "expected fresh_draw or fixed_mean, got '" + v + "'");
         }, true, true}},
        {"p_digital", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.economy.p_digital = parse_probability(k, v);
         }, true, false}},
        {"seed_digital_fraction", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.economy.p_digital = parse_probability(k, v);
         }, false, true}},
        {"network_k", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.network.k = parse_count(k, v);
         }, false, true}},
        {"beta", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.network.beta = parse_probability(k, v);
         }, false, true}},
        {"threshold_mu", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.adoption.threshold_mu = parse_double(k, v);
         }, false, true}},
        {"threshold_sigma", {[](ModelConfig& c, const std::string& k, const std::string& v) {
             c.adoption.threshold_sigma = parse_nonnegative(k, v);
         }, false, true}},
    };
    return keys;
}

// Config key written by each sweep axis.
const std::map<std::string, std::string>& axis_keys() {
    static const std::map<std::string, std::string> keys{
        {"beta", "beta"},
        {"p_digital", "p_digital"},
        {"sigma", "trad_sigma"},
        {"sigma_scale", "sigma_scale"},
        {"tax", "tax"},
        {"threshold_mu", "threshold_mu"},
        {"threshold_sigma", "threshold_sigma"},
    };
    return keys;
}

}  // namespace

ModelConfig ModelConfig::static_defaults() {
    ModelConfig c;
    c.model = ModelKind::Static;
    c.network.n = c.economy.n_agents;
    return c;
}

ModelConfig ModelConfig::dynamic_defaults() {
    ModelConfig c;
    c.model = ModelKind::Dynamic;
    const DynamicModelConfig d;
    c.economy = d.economy;
    c.network = d.network;
    c.adoption = d.adoption;
    return c;
}

void ModelConfig::validate() const {
    economy.validate();
    parse_tax("tax", tax);
    if (model == ModelKind::Dynamic) dynamic().validate();
}

void apply_axis(ModelConfig& config, const std::string& axis, const std::string& value) {
    const auto it = axis_keys().find(axis);
    if (it == axis_keys().end()) throw ConfigError("sweep." + axis, "unknown sweep axis");
    const std::string key = "sweep." + axis;
    const auto& spec = model_keys().at(it->second == "p_digital" && config.model == ModelKind::Dynamic
                                           ? "seed_digital_fraction"
                                           : it->second);
    const bool allowed = config.model == ModelKind::Static ? spec.static_model : spec.dynamic_model;
    if (!allowed) throw ConfigError(key, "axis does not apply to this model");
    spec.set(config, key, value);
}

void ExperimentPlan::validate() const {
    if (n_runs < 1) throw ConfigError("n_runs", "must be at least 1");
    base.validate();
    for (const auto& axis : axes) {
        if (axis.values.empty()) throw ConfigError("sweep." + axis.name, "empty value list");
        if (axis.name == "sigma_scale" && base.economy.sigma_mode.kind != SigmaMode::Kind::HalfNormalPerAgent)
            throw ConfigError("sweep.sigma_scale", "requires sigma_mode = half_normal");
        if (axis.name == "sigma" && base.economy.sigma_mode.kind == SigmaMode::Kind::HalfNormalPerAgent)
            throw ConfigError("sweep.sigma", "has no effect with sigma_mode = half_normal");
    }
    for (const auto& point : grid()) point.config.validate();
}

std::vector<GridPoint> ExperimentPlan::grid() const {
    std::vector<GridPoint> points{GridPoint{{}, base}};
    for (const auto& axis : axes) {
        std::vector<GridPoint> next;
        next.reserve(points.size() * axis.values.size());
        for (const auto& p : points) {
            for (const auto& value : axis.values) {
                GridPoint q = p;
                apply_axis(q.config, axis.name, value);
                q.params.emplace_back(axis.name, value);
                next.push_back(std::move(q));
            }
        }
        points = std::move(next);
    }
    return points;
}

ExperimentPlan parse_config(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::map<std::string, std::string> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no), "expected key = value");
        std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no), "empty key");
        if (seen.contains(key)) throw ConfigError(key, "duplicate key");
        seen.emplace(key, value);
        entries.emplace_back(std::move(key), std::move(value));
    }

    const auto model_it = seen.find("model");
    if (model_it == seen.end()) throw ConfigError("model", "missing required key");
    ExperimentPlan plan;
    if (model_it->second == "static") plan.base = ModelConfig::static_defaults();
    else if (model_it->second == "dynamic") plan.base = ModelConfig::dynamic_defaults();
    else throw ConfigError("model", "expected static or dynamic, got '" + model_it->second + "'");

    std::vector<std::pair<std::string, std::string>> sweeps;
    for (const auto& [key, value] : entries) {
        if (key == "model") continue;
        if (key == "n_runs") {
            plan.n_runs = parse_count(key, value);
        } else if (key == "master_seed") {
            plan.master_seed = parse_u64(key, value);
        } else if (key.starts_with("sweep.")) {
            sweeps.emplace_back(key, value);
        } else {
            const auto it = model_keys().find(key);
            if (it == model_keys().end()) throw ConfigError(key, "unknown key");
            const bool allowed = plan.base.model == ModelKind::Static ? it->second.static_model
                                                                       : it->second.dynamic_model;
            if (!allowed) throw ConfigError(key, "unknown key for model " + model_it->second);
            it->second.set(plan.base, key, value);
        }
    }

    for (const auto& [key, value] : sweeps) {
        SweepAxis axis{key.substr(6), {}};
        if (!axis_keys().contains(axis.name)) throw ConfigError(key, "unknown key");
        for (const auto& item : split_list(value)) {
            if (item.empty()) throw ConfigError(key, "empty list item");
            ModelConfig probe = plan.base;
            apply_axis(probe, axis.name, item);
            axis.values.push_back(axis.name == "tax" ? item : format_number(parse_double(key, item)));
        }
        plan.axes.push_back(std::move(axis));
    }
    std::sort(plan.axes.begin(), plan.axes.end(),
              [](const SweepAxis& a, const SweepAxis& b) { return a.name < b.name; });

    try {
        plan.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError("config", e.what());
    }
    return plan;
}

ExperimentPlan parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    return parse_config(in);
}

}  // namespace misfit
