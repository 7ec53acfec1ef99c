#include "voltcruise/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "voltcruise/atmosphere.hpp"

namespace voltcruise {

using nlohmann::json;

ConfigError::ConfigError(const std::string& message, std::string key, int line)
    : std::runtime_error(message), key_(std::move(key)), line_(line) {}

namespace {

int line_of_offset(const std::string& text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

class Reader {
public:
    Reader(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

    // First line holding "key" after the opening of the named section, or 0.
    int line_of(const std::string& section, const std::string& key) const {
        std::size_t from = 0;
        if (!section.empty()) {
            from = text_.find('"' + section + '"');
            if (from == std::string::npos) {
                from = 0;
            }
        }
        const std::size_t at = text_.find('"' + key + '"', from);
        return at == std::string::npos ? 0 : line_of_offset(text_, at);
    }

    [[noreturn]] void fail(const std::string& section, const std::string& key, const std::string& what) const {
        const int line = line_of(section, key.empty() ? section : key);
        const std::string full = section.empty() || key.empty() ? (key.empty() ? section : key)
                                                                 : section + "." + key;
        std::ostringstream msg;
        msg << source_ << ":" << line << ": `" << full << "` " << what;
        throw ConfigError(msg.str(), key.empty() ? section : key, line);
    }

    const json& section(const json& root, const std::string& name) const {
        if (!root.contains(name)) {
            fail(name, "", "section is missing");
        }
        const json& s = root.at(name);
        if (!s.is_object()) {
            fail(name, "", "must be an object");
        }
        return s;
    }

    void reject_unknown(const json& obj, const std::string& section, const std::set<std::string>& allowed) const {
        for (const auto& item : obj.items()) {
            if (!allowed.contains(item.key())) {
                fail(section, item.key(), "is not a recognized key");
            }
        }
    }

    double number(const json& obj, const std::string& section, const std::string& key) const {
        if (!obj.contains(key)) {
            fail(section, key, "is required but missing");
        }
        const json& v = obj.at(key);
        if (!v.is_number()) {
            fail(section, key, "must be a number");
        }
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            fail(section, key, "must be finite");
        }
        return d;
    }

    double positive(const json& obj, const std::string& section, const std::string& key) const {
        const double d = number(obj, section, key);
        if (!(d > 0.0)) {
            fail(section, key, "must be positive");
        }
        return d;
    }

    double non_negative(const json& obj, const std::string& section, const std::string& key) const {
        const double d = number(obj, section, key);
        if (d < 0.0) {
            fail(section, key, "must be non-negative");
        }
        return d;
    }

private:
    const std::string& text_;
    std::string source_;
};

} // namespace

ScenarioConfig parse_scenario(const std::string& text, const std::string& source) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const int line = line_of_offset(text, e.byte);
        throw ConfigError(source + ":" + std::to_string(line) + ": malformed JSON: " + e.what(), "", line);
    }
    const Reader r(text, source);
    if (!root.is_object()) {
        throw ConfigError(source + ":1: top level must be an object", "", 1);
    }
    r.reject_unknown(root, "", {"name", "aircraft", "battery", "mission", "overrides"});

    ScenarioConfig cfg;
    if (root.contains("name")) {
        if (!root["name"].is_string()) {
            r.fail("", "name", "must be a string");
        }
        cfg.name = root["name"].get<std::string>();
    }

    const json& ac = r.section(root, "aircraft");
    r.reject_unknown(ac, "aircraft",
                     {"wing_area_m2", "cd0", "cd2", "cl_max", "v_max_rated_mps", "v_div_mps", "weight_N"});
    cfg.aircraft.wing_area_m2 = r.positive(ac, "aircraft", "wing_area_m2");
    cfg.aircraft.cd0 = r.positive(ac, "aircraft", "cd0");
    cfg.aircraft.cd2 = r.positive(ac, "aircraft", "cd2");
    cfg.aircraft.cl_max = r.positive(ac, "aircraft", "cl_max");
    cfg.aircraft.v_max_rated_mps = r.positive(ac, "aircraft", "v_max_rated_mps");
    cfg.aircraft.v_div_mps = r.positive(ac, "aircraft", "v_div_mps");
    cfg.aircraft.weight_N = r.positive(ac, "aircraft", "weight_N");

    const json& bt = r.section(root, "battery");
    r.reject_unknown(bt, "battery", {"a_V_per_C", "b_V", "q_full_C", "q_min_C", "q_max_C", "eta"});
    cfg.battery.a_V_per_C = r.non_negative(bt, "battery", "a_V_per_C");
    cfg.battery.b_V = r.positive(bt, "battery", "b_V");
    cfg.battery.q_full_C = r.positive(bt, "battery", "q_full_C");
    cfg.battery.q_min_C = r.non_negative(bt, "battery", "q_min_C");
    cfg.battery.q_max_C = r.positive(bt, "battery", "q_max_C");
    cfg.battery.eta = r.positive(bt, "battery", "eta");
    if (!(cfg.battery.q_min_C < cfg.battery.q_max_C)) {
        r.fail("battery", "q_min_C", "must be below q_max_C");
    }
    if (cfg.battery.q_max_C > cfg.battery.q_full_C) {
        r.fail("battery", "q_max_C", "must not exceed q_full_C");
    }
    if (cfg.battery.eta > 1.0) {
        r.fail("battery", "eta", "must not exceed 1");
    }

    const json& ms = r.section(root, "mission");
    r.reject_unknown(ms, "mission", {"altitude_m", "x0_m", "xf_m", "t0_s", "q0_C"});
    cfg.mission.altitude_m = r.non_negative(ms, "mission", "altitude_m");
    cfg.mission.x0_m = r.number(ms, "mission", "x0_m");
    cfg.mission.xf_m = r.number(ms, "mission", "xf_m");
    cfg.mission.t0_s = r.number(ms, "mission", "t0_s");
    cfg.mission.q0_C = r.positive(ms, "mission", "q0_C");
    if (!(cfg.mission.altitude_m < atmosphere::kTroposphereTopM)) {
        r.fail("mission", "altitude_m", "must be below 11000 m");
    }
    if (cfg.mission.xf_m < cfg.mission.x0_m) {
        r.fail("mission", "xf_m", "must not be less than x0_m");
    }

    if (root.contains("overrides")) {
        const json& ov = r.section(root, "overrides");
        r.reject_unknown(ov, "overrides", {"density_kg_m3"});
        if (ov.contains("density_kg_m3")) {
            cfg.density_override = r.positive(ov, "overrides", "density_kg_m3");
        }
    }
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path + ": cannot open scenario file", "", 0);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

std::string dump_scenario(const ScenarioConfig& s) {
    json root;
    if (!s.name.empty()) {
        root["name"] = s.name;
    }
    root["aircraft"] = {{"wing_area_m2", s.aircraft.wing_area_m2}, {"cd0", s.aircraft.cd0},
                        {"cd2", s.aircraft.cd2}, {"cl_max", s.aircraft.cl_max},
                        {"v_max_rated_mps", s.aircraft.v_max_rated_mps}, {"v_div_mps", s.aircraft.v_div_mps},
                        {"weight_N", s.aircraft.weight_N}};
    root["battery"] = {{"a_V_per_C", s.battery.a_V_per_C}, {"b_V", s.battery.b_V},
                       {"q_full_C", s.battery.q_full_C}, {"q_min_C", s.battery.q_min_C},
                       {"q_max_C", s.battery.q_max_C}, {"eta", s.battery.eta}};
    root["mission"] = {{"altitude_m", s.mission.altitude_m}, {"x0_m", s.mission.x0_m},
                       {"xf_m", s.mission.xf_m}, {"t0_s", s.mission.t0_s}, {"q0_C", s.mission.q0_C}};
    if (s.density_override) {
        root["overrides"] = {{"density_kg_m3", *s.density_override}};
    }
    return root.dump(2) + "\n";
}

} // namespace voltcruise
