#include "voltcruise/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "voltcruise/atmosphere.hpp"
#include "voltcruise/errors.hpp"

#ifndef VOLTCRUISE_VERSION
#define VOLTCRUISE_VERSION "unknown"
#endif

namespace voltcruise::sweeps {

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    return out;
}

// Cells are written by index, so the result does not depend on the thread count.
template <typename Fn>
void for_each_cell(std::size_t count, std::size_t threads, Fn&& fn) {
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += threads) {
                fn(i);
            }
        });
    }
}

std::vector<std::pair<std::string, double>> snapshot(const AircraftParams& a, const BatteryParams& b) {
    return {{"wing_area_m2", a.wing_area_m2}, {"cd0", a.cd0},
            {"cd2", a.cd2}, {"cl_max", a.cl_max},
            {"v_max_rated_mps", a.v_max_rated_mps}, {"v_div_mps", a.v_div_mps},
            {"a_V_per_C", b.a_V_per_C}, {"b_V", b.b_V},
            {"q_full_C", b.q_full_C}, {"q_min_C", b.q_min_C},
            {"q_max_C", b.q_max_C}, {"eta", b.eta}};
}

} // namespace

SweepGrid airspeed_preset() {
    return {linspace(22500.0, 28500.0, 7), linspace(1000.0, 4000.0, 7), {}};
}

SweepGrid efficiency_preset() {
    return {linspace(22500.0, 28500.0, 7), {}, {500000.0, 600000.0, 700000.0, 781000.0}};
}

void validate_axis(const std::vector<double>& values, const char* name) {
    if (values.empty()) {
        throw DomainError(std::string(name) + " must not be empty");
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!std::isfinite(values[k])) {
            throw DomainError(std::string(name) + " contains a non-finite value");
        }
        if (k > 0 && !(values[k] > values[k - 1])) {
            throw DomainError(std::string(name) + " must be strictly increasing");
        }
    }
}

SweepResult<AirspeedRow> sweep_airspeed_vs_altitude(const SweepGrid& grid, const AircraftParams& aircraft,
                                                    const BatteryParams& battery, std::size_t threads) {
    validate_axis(grid.weights_N, "weights_N");
    validate_axis(grid.altitudes_m, "altitudes_m");
    aircraft.validate();
    for (double w : grid.weights_N) {
        if (!(w > 0.0)) {
            throw DomainError("weights_N must be positive");
        }
    }
    for (double h : grid.altitudes_m) {
        atmosphere::air_density(h);
    }

    const std::size_t n_alt = grid.altitudes_m.size();
    SweepResult<AirspeedRow> result;
    result.rows.resize(grid.weights_N.size() * n_alt);
    for_each_cell(result.rows.size(), threads, [&](std::size_t i) {
        AircraftParams cell = aircraft;
        cell.weight_N = grid.weights_N[i / n_alt];
        AirspeedRow& row = result.rows[i];
        row.weight_N = cell.weight_N;
        row.altitude_m = grid.altitudes_m[i % n_alt];
        row.density_kg_m3 = atmosphere::air_density(row.altitude_m);
        row.v_opt_mps = planner::optimal_airspeed(cell, row.density_kg_m3);
        const SpeedEnvelope env = airframe::envelope(cell, row.density_kg_m3);
        row.v_stall_mps = env.v_stall_mps;
        row.v_max_mps = env.v_max_mps;
        row.in_envelope = env.contains(row.v_opt_mps);
    });

    result.metadata = {"", "optimal cruise airspeed vs altitude and weight", VOLTCRUISE_VERSION,
                       snapshot(aircraft, battery)};
    return result;
}

SweepResult<EfficiencyRow> sweep_min_eta_vs_weight(const SweepGrid& grid, const MissionSpec& mission,
                                                   const AircraftParams& aircraft, const BatteryParams& battery,
                                                   double density, std::size_t threads) {
    validate_axis(grid.weights_N, "weights_N");
    validate_axis(grid.q0_values_C, "q0_values_C");
    aircraft.validate();
    battery.validate_without_eta();
    mission.validate();
    for (double w : grid.weights_N) {
        if (!(w > 0.0)) {
            throw DomainError("weights_N must be positive");
        }
    }

    const std::size_t n_q = grid.q0_values_C.size();
    SweepResult<EfficiencyRow> result;
    result.rows.resize(grid.weights_N.size() * n_q);
    for_each_cell(result.rows.size(), threads, [&](std::size_t i) {
        AircraftParams cell = aircraft;
        cell.weight_N = grid.weights_N[i / n_q];
        MissionSpec m = mission;
        m.q0_C = grid.q0_values_C[i % n_q];
        EfficiencyRow& row = result.rows[i];
        row.weight_N = cell.weight_N;
        row.q0_C = m.q0_C;
        row.q0_above_qmin = m.q0_C > battery.q_min_C;
        row.q0_below_qmax = m.q0_C < battery.q_max_C;
        row.eta_min = row.q0_above_qmin ? planner::min_required_efficiency(m, cell, battery, density)
                                        : std::numeric_limits<double>::quiet_NaN();
        row.attainable = row.q0_above_qmin && row.eta_min <= 1.0;
    });

    auto params = snapshot(aircraft, battery);
    params.emplace_back("density_kg_m3", density);
    params.emplace_back("distance_m", mission.distance_m());
    result.metadata = {"", "minimum electrical efficiency vs weight and initial charge", VOLTCRUISE_VERSION,
                       std::move(params)};
    return result;
}

} // namespace voltcruise::sweeps
