#include "voltcruise/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <json.hpp>

namespace voltcruise::format {

using nlohmann::json;

std::string number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return {buf.data(), res.ptr};
}

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json metadata_json(const sweeps::SweepMetadata& m) {
    json params = json::object();
    for (const auto& [k, v] : m.parameters) {
        params[k] = finite_or_null(v);
    }
    return {{"scenario", m.scenario}, {"description", m.description}, {"tool_version", m.tool_version},
            {"parameters", params}};
}

const char* flag(bool b) { return b ? "1" : "0"; }

} // namespace

void write_trajectory_csv(std::ostream& out, const oracle::ChargeTrajectory& trajectory) {
    out << kTrajectoryHeader << '\n';
    for (std::size_t k = 0; k < trajectory.samples.size(); ++k) {
        const BatteryState& s = trajectory.samples[k];
        out << number(s.time_s) << ',' << number(trajectory.distance_m[k]) << ',' << number(s.charge_C) << ','
            << number(s.voltage_V) << ',' << number(s.current_A) << ',' << number(s.voltage_V * s.current_A)
            << '\n';
    }
    if (trajectory.depleted) {
        out << "# depleted,t_s=" << number(trajectory.depletion_time_s)
            << ",x_m=" << number(trajectory.depletion_distance_m) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const sweeps::SweepResult<sweeps::AirspeedRow>& result) {
    out << "weight_N,altitude_m,v_opt_mps,density_kg_m3,v_stall_mps,v_max_mps,in_envelope\n";
    for (const auto& r : result.rows) {
        out << number(r.weight_N) << ',' << number(r.altitude_m) << ',' << number(r.v_opt_mps) << ','
            << number(r.density_kg_m3) << ',' << number(r.v_stall_mps) << ',' << number(r.v_max_mps) << ','
            << flag(r.in_envelope) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const sweeps::SweepResult<sweeps::EfficiencyRow>& result) {
    out << "weight_N,q0_C,eta_min,q0_above_qmin,q0_below_qmax,attainable\n";
    for (const auto& r : result.rows) {
        out << number(r.weight_N) << ',' << number(r.q0_C) << ',' << number(r.eta_min) << ','
            << flag(r.q0_above_qmin) << ',' << flag(r.q0_below_qmax) << ',' << flag(r.attainable) << '\n';
    }
}

void write_sweep_json(std::ostream& out, const sweeps::SweepResult<sweeps::AirspeedRow>& result) {
    json rows = json::array();
    for (const auto& r : result.rows) {
        rows.push_back({{"weight_N", r.weight_N}, {"altitude_m", r.altitude_m}, {"v_opt_mps", r.v_opt_mps},
                        {"density_kg_m3", r.density_kg_m3}, {"v_stall_mps", r.v_stall_mps},
                        {"v_max_mps", r.v_max_mps}, {"in_envelope", r.in_envelope}});
    }
    out << json{{"metadata", metadata_json(result.metadata)}, {"rows", rows}}.dump(2) << '\n';
}

void write_sweep_json(std::ostream& out, const sweeps::SweepResult<sweeps::EfficiencyRow>& result) {
    json rows = json::array();
    for (const auto& r : result.rows) {
        rows.push_back({{"weight_N", r.weight_N}, {"q0_C", r.q0_C}, {"eta_min", finite_or_null(r.eta_min)},
                        {"q0_above_qmin", r.q0_above_qmin}, {"q0_below_qmax", r.q0_below_qmax},
                        {"attainable", r.attainable}});
    }
    out << json{{"metadata", metadata_json(result.metadata)}, {"rows", rows}}.dump(2) << '\n';
}

std::string plan_json(const CruisePlan& plan, const ScenarioConfig& scenario, double eta_min, double range_m) {
    const FeasibilityReport& f = plan.feasibility;
    json feas = {{"speed_lower_margin", finite_or_null(f.speed_lower_margin)},
                 {"speed_upper_margin", finite_or_null(f.speed_upper_margin)},
                 {"q0_margin", finite_or_null(f.q0_margin)},
                 {"qf_margin", finite_or_null(f.qf_margin)},
                 {"z_tf", f.z_tf ? finite_or_null(*f.z_tf) : json(nullptr)},
                 {"feasible", f.feasible}};
    json j = {{"scenario", scenario.name},
              {"density_kg_m3", plan.density_kg_m3},
              {"density_source", scenario.density_override ? "override" : "altitude"},
              {"v_stall_mps", plan.envelope.v_stall_mps},
              {"v_max_mps", plan.envelope.v_max_mps},
              {"v_opt_mps", plan.v_opt_mps},
              {"tf_s", plan.tf_s},
              {"drag_N", plan.drag_N},
              {"energy_J", plan.energy_J},
              {"energy_kWh", plan.energy_J / 3.6e6},
              {"qf_C", finite_or_null(plan.qf_C)},
              {"min_required_efficiency", finite_or_null(eta_min)},
              {"max_feasible_range_m", finite_or_null(range_m)},
              {"feasibility", feas}};
    return j.dump(2) + "\n";
}

} // namespace voltcruise::format
