#include "voltcruise/planner.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "voltcruise/atmosphere.hpp"
#include "voltcruise/errors.hpp"

namespace voltcruise {

void MissionSpec::validate() const {
    for (double v : {altitude_m, x0_m, xf_m, t0_s, q0_C}) {
        if (!std::isfinite(v)) {
            throw DomainError("mission fields must be finite");
        }
    }
    if (xf_m < x0_m) {
        throw DomainError("xf_m must not precede x0_m");
    }
    if (q0_C < 0.0) {
        throw DomainError("q0_C must be non-negative");
    }
}

namespace planner {

namespace {

// Energy drawn from the battery between charges q_hi and q_lo: integral of (aQ + b) dQ.
double usable_energy(const BatteryParams& battery, double q_hi, double q_lo) {
    return 0.5 * battery.a_V_per_C * (q_hi * q_hi - q_lo * q_lo) + battery.b_V * (q_hi - q_lo);
}

} // namespace

double cruise_density(const MissionSpec& mission, std::optional<double> density_override) {
    if (density_override) {
        if (!(*density_override > 0.0) || !std::isfinite(*density_override)) {
            throw DomainError("density override must be positive");
        }
        return *density_override;
    }
    return atmosphere::air_density(mission.altitude_m);
}

double optimal_airspeed(const AircraftParams& aircraft, double density) {
    return airframe::min_drag_speed(aircraft, density);
}

double optimal_final_time(const MissionSpec& mission, double v_opt) {
    if (!(v_opt > 0.0)) {
        throw DomainError("airspeed must be positive");
    }
    return mission.t0_s + mission.distance_m() / v_opt;
}

double total_energy(const MissionSpec& mission, const AircraftParams& aircraft,
                    const BatteryParams& battery, double density) {
    const double v = optimal_airspeed(aircraft, density);
    return airframe::drag(v, aircraft, density).drag_N * mission.distance_m() / battery.eta;
}

double final_charge(const MissionSpec& mission, const AircraftParams& aircraft,
                    const BatteryParams& battery, double density) {
    const double v = optimal_airspeed(aircraft, density);
    const double d = airframe::drag(v, aircraft, density).drag_N;
    return battery::charge_at(optimal_final_time(mission, v), mission.t0_s, mission.q0_C, d, v, battery);
}

CruisePlan plan_at_speed(const MissionSpec& mission, const AircraftParams& aircraft,
                         const BatteryParams& battery, double density, double airspeed_mps) {
    CruisePlan plan;
    plan.density_kg_m3 = density;
    plan.v_opt_mps = airspeed_mps;
    plan.envelope = airframe::envelope(aircraft, density);
    plan.drag_N = airframe::drag(airspeed_mps, aircraft, density).drag_N;
    plan.tf_s = optimal_final_time(mission, airspeed_mps);
    plan.energy_J = plan.drag_N * mission.distance_m() / battery.eta;

    FeasibilityReport& f = plan.feasibility;
    f.speed_lower_margin = airspeed_mps - plan.envelope.v_stall_mps;
    f.speed_upper_margin = plan.envelope.v_max_mps - airspeed_mps;
    f.q0_margin = battery.q_max_C - mission.q0_C;

    bool charge_ok = true;
    if (battery.a_V_per_C >= battery::kConstantVoltageThreshold) {
        f.z_tf = battery::depletion_function(plan.tf_s, mission.t0_s, mission.q0_C, plan.drag_N,
                                             airspeed_mps, battery);
        charge_ok = *f.z_tf < 0.0;
    }
    if (charge_ok) {
        plan.qf_C = battery::charge_at(plan.tf_s, mission.t0_s, mission.q0_C, plan.drag_N, airspeed_mps,
                                       battery);
        f.qf_margin = plan.qf_C - battery.q_min_C;
    } else {
        plan.qf_C = std::numeric_limits<double>::quiet_NaN();
        f.qf_margin = std::numeric_limits<double>::quiet_NaN();
    }

    f.feasible = f.speed_lower_margin > 0.0 && f.speed_upper_margin > 0.0 && f.q0_margin > 0.0 &&
                 charge_ok && f.qf_margin > 0.0;
    return plan;
}

CruisePlan plan_cruise(const MissionSpec& mission, const AircraftParams& aircraft,
                       const BatteryParams& battery, std::optional<double> density_override) {
    aircraft.validate();
    battery.validate();
    mission.validate();
    const double density = cruise_density(mission, density_override);
    return plan_at_speed(mission, aircraft, battery, density, optimal_airspeed(aircraft, density));
}

double min_required_efficiency(const MissionSpec& mission, const AircraftParams& aircraft,
                               const BatteryParams& battery, double density) {
    if (!(mission.q0_C > battery.q_min_C)) {
        std::ostringstream msg;
        msg << "no feasible efficiency: Q0 = " << mission.q0_C << " C does not exceed Q_min = "
            << battery.q_min_C << " C";
        throw DomainError(msg.str());
    }
    const double v = optimal_airspeed(aircraft, density);
    const double d = airframe::drag(v, aircraft, density).drag_N;
    return d * mission.distance_m() / usable_energy(battery, mission.q0_C, battery.q_min_C);
}

double max_feasible_range(const AircraftParams& aircraft, const BatteryParams& battery, double q0,
                          double density) {
    if (q0 < battery.q_min_C) {
        throw DomainError("q0 below q_min: no usable charge");
    }
    const double v = optimal_airspeed(aircraft, density);
    const double d = airframe::drag(v, aircraft, density).drag_N;
    return battery.eta * usable_energy(battery, q0, battery.q_min_C) / d;
}

} // namespace planner
} // namespace voltcruise
