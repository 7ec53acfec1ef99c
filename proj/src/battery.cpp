#include "voltcruise/battery.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "voltcruise/errors.hpp"

namespace voltcruise {

namespace {

void require(bool ok, const char* field, const std::string& what) {
    if (!ok) {
        throw DomainError(std::string(field) + " " + what);
    }
}

bool finite(double v) { return std::isfinite(v); }

} // namespace

void BatteryParams::validate_without_eta() const {
    require(finite(a_V_per_C) && a_V_per_C >= 0.0, "a_V_per_C", "must be non-negative");
    require(finite(b_V) && b_V > 0.0, "b_V", "must be positive");
    require(finite(q_full_C) && q_full_C > 0.0, "q_full_C", "must be positive");
    require(finite(q_min_C) && q_min_C >= 0.0, "q_min_C", "must be non-negative");
    require(finite(q_max_C) && q_min_C < q_max_C, "q_max_C", "must exceed q_min_C");
    require(q_max_C <= q_full_C, "q_max_C", "must not exceed q_full_C");
}

void BatteryParams::validate() const {
    validate_without_eta();
    require(finite(eta) && eta > 0.0 && eta <= 1.0, "eta", "must lie in (0, 1]");
}

namespace battery {

double voltage(double charge_C, const BatteryParams& battery) {
    return battery.a_V_per_C * charge_C + battery.b_V;
}

double charge_rate(double charge_C, double drag_N, double airspeed_mps, const BatteryParams& battery) {
    const double u = voltage(charge_C, battery);
    if (!(u > 0.0)) {
        std::ostringstream msg;
        msg << "supply voltage " << u << " V is not positive at charge " << charge_C << " C";
        throw ModelViolation(msg.str());
    }
    return -drag_N * airspeed_mps / (battery.eta * u);
}

double depletion_function(double t, double t0, double q0, double drag_N, double airspeed_mps,
                          const BatteryParams& battery) {
    const double a = battery.a_V_per_C;
    return drag_N * airspeed_mps / battery.eta * (t - t0) - 0.5 * a * q0 * q0 - battery.b_V * q0;
}

double charge_at(double t, double t0, double q0, double drag_N, double airspeed_mps,
                 const BatteryParams& battery) {
    if (t < t0) {
        throw DomainError("charge_at: t precedes t0");
    }
    const double a = battery.a_V_per_C;
    const double b = battery.b_V;
    if (a < kConstantVoltageThreshold) {
        return q0 - drag_N * airspeed_mps / (battery.eta * b) * (t - t0);
    }
    const double z = depletion_function(t, t0, q0, drag_N, airspeed_mps, battery);
    if (!(z < 0.0)) {
        std::ostringstream msg;
        msg << "battery depleted: Z(t) = " << z << " >= 0 at t = " << t << " s";
        throw DepletionError(msg.str());
    }
    // Rationalized positive root of a Q^2 / 2 + b Q + Z = 0.
    return -2.0 * z / (b + std::sqrt(b * b - 2.0 * a * z));
}

BatteryState state_at(double t, double charge_C, double drag_N, double airspeed_mps,
                      const BatteryParams& battery) {
    return {t, charge_C, voltage(charge_C, battery), -charge_rate(charge_C, drag_N, airspeed_mps, battery)};
}

} // namespace battery
} // namespace voltcruise
