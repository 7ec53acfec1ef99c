#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "voltcruise/airframe.hpp"
#include "voltcruise/battery.hpp"
#include "voltcruise/planner.hpp"

namespace voltcruise {

/// A scenario file failed to parse or validate. key() and line() locate the problem.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& message, std::string key, int line);

    [[nodiscard]] const std::string& key() const { return key_; }
    [[nodiscard]] int line() const { return line_; }

private:
    std::string key_;
    int line_;
};

struct ScenarioConfig {
    std::string name;
    AircraftParams aircraft;
    BatteryParams battery;
    MissionSpec mission;
    std::optional<double> density_override;

    [[nodiscard]] double density() const { return planner::cruise_density(mission, density_override); }
};

/// Parses a JSON scenario with sections "aircraft", "battery", "mission" and optional
/// "overrides" {"density_kg_m3"} and top-level "name". Unknown keys are rejected.
ScenarioConfig parse_scenario(const std::string& text, const std::string& source = "<string>");

ScenarioConfig load_scenario(const std::string& path);

/// Serializes back to the scenario file format.
std::string dump_scenario(const ScenarioConfig& scenario);

} // namespace voltcruise
