#pragma once

namespace voltcruise {

/// Affine-voltage battery U(Q) = a Q + b with a lumped electrical efficiency.
struct BatteryParams {
    double a_V_per_C = 0.0;
    double b_V = 0.0;
    double q_full_C = 0.0;
    double q_min_C = 0.0;
    double q_max_C = 0.0;
    double eta = 1.0;

    /// @throws DomainError naming the offending field
    void validate() const;
    /// Same checks as validate() except eta, for callers solving for it.
    void validate_without_eta() const;
};

struct BatteryState {
    double time_s = 0.0;
    double charge_C = 0.0;
    double voltage_V = 0.0;
    double current_A = 0.0;
};

namespace battery {

/// Below this coefficient the constant-voltage closed form is used.
inline constexpr double kConstantVoltageThreshold = 1e-15;

double voltage(double charge_C, const BatteryParams& battery);

/// dQ/dt = -D v / (eta (a Q + b)); always negative.
/// @throws ModelViolation when the supply voltage is not positive
double charge_rate(double charge_C, double drag_N, double airspeed_mps, const BatteryParams& battery);

/// Z(t) = (D v / eta)(t - t0) - a Q0^2 / 2 - b Q0. A positive charge root exists while Z < 0.
double depletion_function(double t, double t0, double q0, double drag_N, double airspeed_mps,
                          const BatteryParams& battery);

/// Closed-form charge at time t under constant drag and airspeed.
/// @throws DomainError if t < t0
/// @throws DepletionError if a > 0 and Z(t) >= 0
double charge_at(double t, double t0, double q0, double drag_N, double airspeed_mps,
                 const BatteryParams& battery);

BatteryState state_at(double t, double charge_C, double drag_N, double airspeed_mps,
                      const BatteryParams& battery);

} // namespace battery
} // namespace voltcruise
