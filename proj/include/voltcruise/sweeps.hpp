#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "voltcruise/airframe.hpp"
#include "voltcruise/battery.hpp"
#include "voltcruise/planner.hpp"

namespace voltcruise::sweeps {

struct SweepGrid {
    std::vector<double> weights_N;
    std::vector<double> altitudes_m;
    std::vector<double> q0_values_C;
};

/// 7 weights in [22500, 28500] N by 7 altitudes in [1000, 4000] m.
SweepGrid airspeed_preset();
/// 7 weights in [22500, 28500] N by Q_0 in {500000, 600000, 700000, 781000} C.
SweepGrid efficiency_preset();

/// @throws DomainError if a list is empty or not strictly increasing
void validate_axis(const std::vector<double>& values, const char* name);

struct SweepMetadata {
    std::string scenario;
    std::string description;
    std::string tool_version;
    std::vector<std::pair<std::string, double>> parameters;
};

struct AirspeedRow {
    double weight_N = 0.0;
    double altitude_m = 0.0;
    double v_opt_mps = 0.0;
    double density_kg_m3 = 0.0;
    double v_stall_mps = 0.0;
    double v_max_mps = 0.0;
    bool in_envelope = false;
};

struct EfficiencyRow {
    double weight_N = 0.0;
    double q0_C = 0.0;
    double eta_min = 0.0;        ///< NaN when Q_0 <= Q_min
    bool q0_above_qmin = false;
    bool q0_below_qmax = false;
    bool attainable = false;     ///< Q_0 > Q_min and eta_min <= 1
};

template <typename Row>
struct SweepResult {
    std::vector<Row> rows;
    SweepMetadata metadata;
};

/// Optimal airspeed over weight x altitude. Rows are weight-major.
SweepResult<AirspeedRow> sweep_airspeed_vs_altitude(const SweepGrid& grid, const AircraftParams& aircraft,
                                                    const BatteryParams& battery, std::size_t threads = 1);

/// Minimum electrical efficiency over weight x initial charge at a fixed density. Rows are weight-major.
SweepResult<EfficiencyRow> sweep_min_eta_vs_weight(const SweepGrid& grid, const MissionSpec& mission,
                                                   const AircraftParams& aircraft, const BatteryParams& battery,
                                                   double density, std::size_t threads = 1);

} // namespace voltcruise::sweeps
