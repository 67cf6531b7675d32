#include "slowlight/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace slowlight {

namespace {

struct RawEntry {
    std::string value;
    std::size_t line;
};

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

double parse_double(std::string_view token, std::size_t line, const std::string& key) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw config_error("malformed number '" + std::string(token) + "' for key '" + key +
                               "' (line " + std::to_string(line) + ")",
                           line);
    return v;
}

std::vector<double> parse_doubles(std::string_view text, std::size_t line,
                                  const std::string& key) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
        out.push_back(parse_double(text.substr(pos, end - pos), line, key));
        pos = end;
    }
    return out;
}

std::size_t parse_count(std::string_view token, std::size_t line, const std::string& key) {
    const double v = parse_double(token, line, key);
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e12)
        throw config_error("key '" + key + "' must be a positive integer (line " +
                               std::to_string(line) + ")",
                           line);
    return static_cast<std::size_t>(v);
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "scenario",   "n0",         "omega0",      "alpha",       "vg_over_c",
        "delta_omega", "halfwidth", "count",       "vg_list",     "vg_log_range",
        "detuning_range", "freq_range", "density", "wavelength",  "gamma",
        "rabi",       "out",
    };
    return keys;
}

// Keys each scenario accepts beyond "scenario" and "out".
const std::map<Scenario, std::set<std::string>>& allowed_keys() {
    static const std::map<Scenario, std::set<std::string>> m = {
        {Scenario::fig1a, {"n0", "omega0", "vg_list", "detuning_range"}},
        {Scenario::fig1b, {"n0", "omega0", "vg_list", "vg_log_range"}},
        {Scenario::fig2,
         {"n0", "omega0", "delta_omega", "halfwidth", "count", "vg_list", "vg_log_range"}},
        {Scenario::fig3, {"n0", "omega0", "alpha", "vg_over_c", "freq_range"}},
        {Scenario::custom_reflectance,
         {"n0", "omega0", "alpha", "vg_over_c", "detuning_range"}},
        {Scenario::custom_sweep,
         {"n0", "omega0", "delta_omega", "halfwidth", "count", "vg_list", "vg_log_range"}},
        {Scenario::eit_estimate, {"density", "wavelength", "gamma", "rabi"}},
    };
    return m;
}

Scenario parse_scenario(const std::string& value, std::size_t line) {
    if (value == "fig1a") return Scenario::fig1a;
    if (value == "fig1b") return Scenario::fig1b;
    if (value == "fig2") return Scenario::fig2;
    if (value == "fig3") return Scenario::fig3;
    if (value == "custom-reflectance") return Scenario::custom_reflectance;
    if (value == "custom-sweep") return Scenario::custom_sweep;
    if (value == "eit-estimate") return Scenario::eit_estimate;
    throw config_error("unrecognized scenario '" + value + "' (line " + std::to_string(line) +
                           ")",
                       line);
}

LogRange parse_log_range(const std::string& value, std::size_t line, const std::string& key) {
    const auto v = parse_doubles(value, line, key);
    if (v.size() != 3)
        throw config_error("key '" + key + "' expects 'lo hi count' (line " +
                               std::to_string(line) + ")",
                           line);
    LogRange r{v[0], v[1], static_cast<std::size_t>(v[2])};
    if (!(r.lo > 0.0) || !(r.hi > r.lo) || v[2] < 2.0 || v[2] != std::floor(v[2]))
        throw config_error("key '" + key + "' needs 0 < lo < hi and integer count >= 2 (line " +
                               std::to_string(line) + ")",
                           line);
    return r;
}

LinRange parse_lin_range(const std::string& value, std::size_t line, const std::string& key) {
    const auto v = parse_doubles(value, line, key);
    if (v.size() != 3)
        throw config_error("key '" + key + "' expects 'lo hi count' (line " +
                               std::to_string(line) + ")",
                           line);
    LinRange r{v[0], v[1], static_cast<std::size_t>(v[2])};
    if (!(r.hi > r.lo) || v[2] < 2.0 || v[2] != std::floor(v[2]))
        throw config_error("key '" + key + "' needs lo < hi and integer count >= 2 (line " +
                               std::to_string(line) + ")",
                           line);
    return r;
}

}  // namespace

std::string_view scenario_name(Scenario s) {
    switch (s) {
        case Scenario::fig1a: return "fig1a";
        case Scenario::fig1b: return "fig1b";
        case Scenario::fig2: return "fig2";
        case Scenario::fig3: return "fig3";
        case Scenario::custom_reflectance: return "custom-reflectance";
        case Scenario::custom_sweep: return "custom-sweep";
        case Scenario::eit_estimate: return "eit-estimate";
    }
    return "?";
}

ScenarioConfig parse_config(std::string_view text) {
    std::map<std::string, RawEntry> entries;
    ScenarioConfig cfg;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw config_error(
                "expected 'key = value' (line " + std::to_string(line_no) + ")", line_no);
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key.empty())
            throw config_error("missing key (line " + std::to_string(line_no) + ")", line_no);
        if (value.empty())
            throw config_error(
                "missing value for key '" + key + "' (line " + std::to_string(line_no) + ")",
                line_no);
        if (!known_keys().count(key))
            throw config_error(
                "unknown key '" + key + "' (line " + std::to_string(line_no) + ")", line_no);
        if (const auto it = entries.find(key); it != entries.end())
            throw config_error("duplicate key '" + key + "' (lines " +
                                   std::to_string(it->second.line) + " and " +
                                   std::to_string(line_no) + ")",
                               line_no);
        entries.emplace(key, RawEntry{value, line_no});
        cfg.echo.emplace_back(key, value);
    }

    const auto scen_it = entries.find("scenario");
    if (scen_it == entries.end())
        throw config_error("missing required key 'scenario'");
    cfg.scenario = parse_scenario(scen_it->second.value, scen_it->second.line);

    const auto& allowed = allowed_keys().at(cfg.scenario);
    for (const auto& [key, entry] : entries) {
        if (key == "scenario" || key == "out") continue;
        if (!allowed.count(key))
            throw config_error("key '" + key + "' does not apply to scenario '" +
                                   std::string(scenario_name(cfg.scenario)) + "' (line " +
                                   std::to_string(entry.line) + ")",
                               entry.line);
    }

    auto get = [&](const char* key) -> const RawEntry* {
        const auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };
    auto require = [&](const char* key) -> const RawEntry& {
        const RawEntry* e = get(key);
        if (!e)
            throw config_error("missing required key '" + std::string(key) + "' for scenario '" +
                               std::string(scenario_name(cfg.scenario)) + "'");
        return *e;
    };
    auto positive = [&](const char* key, double v, std::size_t line) {
        if (!(v > 0.0))
            throw config_error("key '" + std::string(key) + "' must be positive (line " +
                                   std::to_string(line) + ")",
                               line);
        return v;
    };

    if (const RawEntry* e = get("out")) cfg.out = e->value;
    if (const RawEntry* e = get("n0")) cfg.n0 = positive("n0", parse_double(e->value, e->line, "n0"), e->line);

    if (const RawEntry* e = get("alpha"))
        cfg.alpha = positive("alpha", parse_double(e->value, e->line, "alpha"), e->line);
    if (const RawEntry* e = get("vg_over_c")) {
        const double v = parse_double(e->value, e->line, "vg_over_c");
        if (!(v > 0.0) || !(v < 1.0))
            throw config_error("key 'vg_over_c' must lie in (0, 1) (line " +
                                   std::to_string(e->line) + ")",
                               e->line);
        cfg.vg_over_c = v;
    }
    if (cfg.alpha && cfg.vg_over_c) {
        const std::size_t la = entries.at("alpha").line;
        const std::size_t lv = entries.at("vg_over_c").line;
        throw config_error("keys 'alpha' (line " + std::to_string(la) + ") and 'vg_over_c' (line " +
                               std::to_string(lv) +
                               ") are mutually exclusive; supply exactly one",
                           std::max(la, lv));
    }

    if (const RawEntry* e = get("halfwidth"))
        cfg.halfwidth = positive("halfwidth", parse_double(e->value, e->line, "halfwidth"), e->line);
    if (const RawEntry* e = get("count")) cfg.count = parse_count(e->value, e->line, "count");
    if (const RawEntry* e = get("delta_omega"))
        cfg.delta_omega =
            positive("delta_omega", parse_double(e->value, e->line, "delta_omega"), e->line);
    if (const RawEntry* e = get("omega0"))
        cfg.omega0 = positive("omega0", parse_double(e->value, e->line, "omega0"), e->line);

    if (const RawEntry* e = get("vg_list")) {
        cfg.vg_list = parse_doubles(e->value, e->line, "vg_list");
        if (cfg.vg_list.empty())
            throw config_error("key 'vg_list' must contain at least one value (line " +
                                   std::to_string(e->line) + ")",
                               e->line);
        for (double v : cfg.vg_list)
            if (!(v > 0.0) || !(v < 1.0))
                throw config_error("'vg_list' entries are vg/c and must lie in (0, 1) (line " +
                                       std::to_string(e->line) + ")",
                                   e->line);
    }
    if (const RawEntry* e = get("vg_log_range"))
        cfg.vg_log_range = parse_log_range(e->value, e->line, "vg_log_range");
    if (const RawEntry* e = get("detuning_range"))
        cfg.detuning_range = parse_lin_range(e->value, e->line, "detuning_range");
    if (const RawEntry* e = get("freq_range")) {
        cfg.freq_range = parse_lin_range(e->value, e->line, "freq_range");
        if (!(cfg.freq_range->lo > 0.0))
            throw config_error("key 'freq_range' is in scaled frequency and must be positive (line " +
                                   std::to_string(e->line) + ")",
                               e->line);
    }

    if (const RawEntry* e = get("density"))
        cfg.density = positive("density", parse_double(e->value, e->line, "density"), e->line);
    if (const RawEntry* e = get("wavelength"))
        cfg.wavelength =
            positive("wavelength", parse_double(e->value, e->line, "wavelength"), e->line);
    if (const RawEntry* e = get("gamma"))
        cfg.gamma = positive("gamma", parse_double(e->value, e->line, "gamma"), e->line);
    if (const RawEntry* e = get("rabi"))
        cfg.rabi = positive("rabi", parse_double(e->value, e->line, "rabi"), e->line);

    // Per-scenario requirements.
    switch (cfg.scenario) {
        case Scenario::fig1a:
        case Scenario::fig1b:
            require("omega0");
            if (cfg.scenario == Scenario::fig1b && !cfg.vg_list.empty() && cfg.vg_log_range)
                throw config_error("scenario fig1b takes either 'vg_list' or 'vg_log_range', not both");
            break;
        case Scenario::fig2:
        case Scenario::custom_sweep: {
            require("omega0");
            require("delta_omega");
            const bool has_list = !cfg.vg_list.empty();
            const bool has_range = cfg.vg_log_range.has_value();
            if (has_list == has_range)
                throw config_error("scenario " + std::string(scenario_name(cfg.scenario)) +
                                   " requires exactly one of 'vg_list' or 'vg_log_range'");
            break;
        }
        case Scenario::fig3:
        case Scenario::custom_reflectance:
            require("omega0");
            if (!cfg.alpha && !cfg.vg_over_c)
                throw config_error("scenario " + std::string(scenario_name(cfg.scenario)) +
                                   " requires exactly one of 'alpha' or 'vg_over_c'");
            break;
        case Scenario::eit_estimate:
            require("density");
            require("wavelength");
            break;
    }

    return cfg;
}

}  // namespace slowlight
