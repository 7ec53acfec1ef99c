#pragma once

#include <cstddef>
#include <vector>

#include "voltcruise/airframe.hpp"
#include "voltcruise/battery.hpp"
#include "voltcruise/planner.hpp"

namespace voltcruise::oracle {

/// Fixed-step RK4 solution of the charge ODE along a constant-speed cruise.
struct ChargeTrajectory {
    std::vector<BatteryState> samples;
    std::vector<double> distance_m;  ///< cumulative distance from x_0 at each sample
    double step_s = 0.0;
    double airspeed_mps = 0.0;
    double drag_N = 0.0;
    bool depleted = false;           ///< charge reached the floor before x_f
    double depletion_time_s = 0.0;
    double depletion_distance_m = 0.0;

    [[nodiscard]] const BatteryState& final_state() const { return samples.back(); }
    [[nodiscard]] bool completed() const { return !depleted; }
};

struct IntegrationOptions {
    /// Integration stops when the charge falls to this level. Clamped to >= 0.
    double charge_floor_C = 0.0;
    /// Width to which a floor crossing inside a step is bisected.
    double crossing_tolerance_s = 1e-6;
};

/**
 * @brief Integrates dQ/dt = -D v / (eta (a Q + b)) with classical RK4.
 *
 * Runs from (t0, Q0) until the aircraft has covered x_f - x_0 (the last step is
 * shortened to land exactly on x_f) or the charge reaches the floor.
 */
ChargeTrajectory integrate_charge(const MissionSpec& mission, const AircraftParams& aircraft,
                                  const BatteryParams& battery, double density, double airspeed_mps,
                                  double step_s, const IntegrationOptions& options = {});

/// Trapezoidal sum of U i dt over the trajectory samples.
double trajectory_energy(const ChargeTrajectory& trajectory);

/// Energy released by the charge drawn along the trajectory, integral of U dQ.
double drawn_charge_energy(const ChargeTrajectory& trajectory, const BatteryParams& battery);

struct GridSearchResult {
    double v_best_mps = 0.0;
    double energy_best_J = 0.0;
    std::size_t points = 0;
};

/// Brute-force minimum of D(v) (x_f - x_0) / eta over grid points strictly inside the envelope.
/// @throws DomainError for an empty envelope or non-positive step
GridSearchResult grid_search_optimal_speed(const MissionSpec& mission, const AircraftParams& aircraft,
                                           const BatteryParams& battery, double density,
                                           double grid_step_mps);

struct PontryaginDiagnostics {
    double hamiltonian_residual = 0.0;   ///< max |H(t)| over the samples
    double costate_q_residual = 0.0;     ///< |J*_Q(t_f)|
    double stationarity_residual = 0.0;  ///< |D_v(v)| v^2 / eta
    double reference_power_W = 0.0;      ///< D v / eta, for relative comparisons
    std::size_t samples = 0;
};

/// Evaluates the minimum-principle conditions along a constant-speed plan.
PontryaginDiagnostics pontryagin_residuals(const CruisePlan& plan, const MissionSpec& mission,
                                           const AircraftParams& aircraft, const BatteryParams& battery,
                                           std::size_t sample_count = 101);

} // namespace voltcruise::oracle
