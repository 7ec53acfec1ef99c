#pragma once

#include <optional>

#include "voltcruise/airframe.hpp"
#include "voltcruise/battery.hpp"

namespace voltcruise {

struct MissionSpec {
    double altitude_m = 0.0;
    double x0_m = 0.0;
    double xf_m = 0.0;
    double t0_s = 0.0;
    double q0_C = 0.0;

    [[nodiscard]] double distance_m() const { return xf_m - x0_m; }

    /// @throws DomainError for a backward segment or non-finite fields
    void validate() const;
};

/// Signed margins of the optimality/feasibility conditions. Positive means satisfied.
struct FeasibilityReport {
    double speed_lower_margin = 0.0;  ///< v* - v_stall
    double speed_upper_margin = 0.0;  ///< v_max - v*
    double q0_margin = 0.0;           ///< Q_max - Q_0
    double qf_margin = 0.0;           ///< Q(t_f) - Q_min; NaN when no admissible Q(t_f) exists
    std::optional<double> z_tf;       ///< only for charge-dependent voltage
    bool feasible = false;
};

struct CruisePlan {
    double v_opt_mps = 0.0;
    double tf_s = 0.0;
    double drag_N = 0.0;
    double energy_J = 0.0;
    double qf_C = 0.0;  ///< NaN when the battery empties before x_f
    double density_kg_m3 = 0.0;
    SpeedEnvelope envelope;
    FeasibilityReport feasibility;
};

namespace planner {

/// Resolves cruise density: the override when present, else the tropospheric model.
double cruise_density(const MissionSpec& mission, std::optional<double> density_override);

double optimal_airspeed(const AircraftParams& aircraft, double density);

double optimal_final_time(const MissionSpec& mission, double v_opt);

/// J = D(v*) (x_f - x_0) / eta.
double total_energy(const MissionSpec& mission, const AircraftParams& aircraft,
                    const BatteryParams& battery, double density);

/// Q(t_f) along the optimal plan.
/// @throws DepletionError when a > 0 and Z(t_f) >= 0
double final_charge(const MissionSpec& mission, const AircraftParams& aircraft,
                    const BatteryParams& battery, double density);

/// Evaluates a constant-speed cruise at an arbitrary airspeed. Infeasibility is reported, not thrown.
CruisePlan plan_at_speed(const MissionSpec& mission, const AircraftParams& aircraft,
                         const BatteryParams& battery, double density, double airspeed_mps);

/// Full optimal plan. Infeasible plans are returned with feasible = false.
/// @throws DomainError for invalid parameter records
CruisePlan plan_cruise(const MissionSpec& mission, const AircraftParams& aircraft,
                       const BatteryParams& battery, std::optional<double> density_override = std::nullopt);

/// Efficiency at which Q(t_f) = Q_min exactly. battery.eta is ignored.
/// @throws DomainError if Q_0 <= Q_min
double min_required_efficiency(const MissionSpec& mission, const AircraftParams& aircraft,
                               const BatteryParams& battery, double density);

/// Segment length at which Q(t_f) = Q_min exactly.
/// @throws DomainError if q0 < q_min
double max_feasible_range(const AircraftParams& aircraft, const BatteryParams& battery, double q0,
                          double density);

} // namespace planner
} // namespace voltcruise
