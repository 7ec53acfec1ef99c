#include "voltcruise/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "voltcruise/errors.hpp"

namespace voltcruise::oracle {

namespace {

struct Rk4Stepper {
    double drag_N;
    double airspeed_mps;
    const BatteryParams& battery;

    double rate(double q) const { return battery::charge_rate(q, drag_N, airspeed_mps, battery); }

    double step(double q, double h) const {
        const double k1 = rate(q);
        const double k2 = rate(q + 0.5 * h * k1);
        const double k3 = rate(q + 0.5 * h * k2);
        const double k4 = rate(q + h * k3);
        return q + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
};

} // namespace

ChargeTrajectory integrate_charge(const MissionSpec& mission, const AircraftParams& aircraft,
                                  const BatteryParams& battery, double density, double airspeed_mps,
                                  double step_s, const IntegrationOptions& options) {
    if (!(step_s > 0.0)) {
        throw DomainError("integration step must be positive");
    }
    if (!(airspeed_mps > 0.0)) {
        throw DomainError("airspeed must be positive");
    }
    mission.validate();

    ChargeTrajectory traj;
    traj.step_s = step_s;
    traj.airspeed_mps = airspeed_mps;
    traj.drag_N = airframe::drag(airspeed_mps, aircraft, density).drag_N;

    const Rk4Stepper rk4{traj.drag_N, airspeed_mps, battery};
    const double floor = std::max(options.charge_floor_C, 0.0);
    const double duration = mission.distance_m() / airspeed_mps;

    auto push = [&](double elapsed, double q) {
        traj.samples.push_back(battery::state_at(mission.t0_s + elapsed, q, traj.drag_N, airspeed_mps, battery));
        traj.distance_m.push_back(airspeed_mps * elapsed);
    };

    push(0.0, mission.q0_C);
    if (mission.q0_C <= floor && duration > 0.0) {
        traj.depleted = true;
        traj.depletion_time_s = mission.t0_s;
        return traj;
    }

    double q = mission.q0_C;
    double elapsed = 0.0;
    for (std::size_t k = 1; elapsed < duration; ++k) {
        // Time grid is t0 + k h; the final step is shortened to land on x_f.
        double next = static_cast<double>(k) * step_s;
        if (next > duration || duration - next < 1e-9 * step_s) {
            next = duration;
        }
        const double h = next - elapsed;
        const double q_next = rk4.step(q, h);
        if (q_next <= floor) {
            double lo = 0.0;
            double hi = h;
            while (hi - lo > options.crossing_tolerance_s) {
                const double mid = 0.5 * (lo + hi);
                (rk4.step(q, mid) > floor ? lo : hi) = mid;
            }
            traj.depleted = true;
            traj.depletion_time_s = mission.t0_s + elapsed + hi;
            traj.depletion_distance_m = airspeed_mps * (elapsed + hi);
            push(elapsed + hi, rk4.step(q, hi));
            return traj;
        }
        q = q_next;
        elapsed = next;
        push(elapsed, q);
    }
    return traj;
}

double trajectory_energy(const ChargeTrajectory& trajectory) {
    double energy = 0.0;
    const auto& s = trajectory.samples;
    for (std::size_t k = 1; k < s.size(); ++k) {
        const double p0 = s[k - 1].voltage_V * s[k - 1].current_A;
        const double p1 = s[k].voltage_V * s[k].current_A;
        energy += 0.5 * (p0 + p1) * (s[k].time_s - s[k - 1].time_s);
    }
    return energy;
}

double drawn_charge_energy(const ChargeTrajectory& trajectory, const BatteryParams& battery) {
    const double q0 = trajectory.samples.front().charge_C;
    const double q1 = trajectory.samples.back().charge_C;
    return 0.5 * battery.a_V_per_C * (q0 * q0 - q1 * q1) + battery.b_V * (q0 - q1);
}

GridSearchResult grid_search_optimal_speed(const MissionSpec& mission, const AircraftParams& aircraft,
                                           const BatteryParams& battery, double density,
                                           double grid_step_mps) {
    if (!(grid_step_mps > 0.0)) {
        throw DomainError("grid step must be positive");
    }
    const SpeedEnvelope env = airframe::envelope(aircraft, density);
    if (!env.non_empty()) {
        throw DomainError("speed envelope is empty: stall speed is not below maximum speed");
    }

    GridSearchResult best;
    double best_drag = 0.0;
    for (std::size_t k = 1;; ++k) {
        const double v = env.v_stall_mps + static_cast<double>(k) * grid_step_mps;
        if (!(v < env.v_max_mps)) {
            break;
        }
        // Ranking by drag is equivalent to ranking by energy for any positive distance.
        const double d = airframe::drag(v, aircraft, density).drag_N;
        if (best.points == 0 || d < best_drag) {
            best_drag = d;
            best.v_best_mps = v;
        }
        ++best.points;
    }
    if (best.points == 0) {
        throw DomainError("grid step exceeds the speed envelope width");
    }
    best.energy_best_J = best_drag * mission.distance_m() / battery.eta;
    return best;
}

PontryaginDiagnostics pontryagin_residuals(const CruisePlan& plan, const MissionSpec& mission,
                                           const AircraftParams& aircraft, const BatteryParams& battery,
                                           std::size_t sample_count) {
    sample_count = std::max<std::size_t>(sample_count, 2);
    const double v = plan.v_opt_mps;
    const AeroPoint aero = airframe::drag(v, aircraft, plan.density_kg_m3);
    const double eta = battery.eta;

    // Transversality on the charge costate; the position costate follows from dH/dv = 0.
    const double costate_q = 0.0;
    const double costate_x = -(aero.drag_dv * v + aero.drag_N) / eta;

    PontryaginDiagnostics diag;
    diag.samples = sample_count;
    diag.reference_power_W = aero.drag_N * v / eta;
    diag.costate_q_residual = std::abs(costate_q);
    diag.stationarity_residual = std::abs(aero.drag_dv) * v * v / eta;

    const double span = plan.tf_s - mission.t0_s;
    for (std::size_t k = 0; k < sample_count; ++k) {
        const double t = mission.t0_s + span * static_cast<double>(k) / static_cast<double>(sample_count - 1);
        // The charge-costate term vanishes under transversality but is kept in H.
        double charge_term = 0.0;
        const bool admissible =
            battery.a_V_per_C < battery::kConstantVoltageThreshold ||
            battery::depletion_function(t, mission.t0_s, mission.q0_C, aero.drag_N, v, battery) < 0.0;
        if (admissible) {
            const double q = battery::charge_at(t, mission.t0_s, mission.q0_C, aero.drag_N, v, battery);
            const double u = battery::voltage(q, battery);
            if (u > 0.0) {
                charge_term = costate_q * aero.drag_N * v / (eta * u);
            }
        }
        const double h = costate_x * v + aero.drag_N * v / eta - charge_term;
        diag.hamiltonian_residual = std::max(diag.hamiltonian_residual, std::abs(h));
    }
    return diag;
}

} // namespace voltcruise::oracle
