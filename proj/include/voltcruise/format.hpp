#pragma once

#include <ostream>
#include <string>

#include "voltcruise/oracle.hpp"
#include "voltcruise/planner.hpp"
#include "voltcruise/scenario.hpp"
#include "voltcruise/sweeps.hpp"

namespace voltcruise::format {

/// Shortest decimal that round-trips to the same double; "nan"/"inf" for non-finite values.
std::string number(double value);

inline constexpr const char* kTrajectoryHeader = "t_s,x_m,Q_C,U_V,i_A,P_W";

void write_trajectory_csv(std::ostream& out, const oracle::ChargeTrajectory& trajectory);

void write_sweep_csv(std::ostream& out, const sweeps::SweepResult<sweeps::AirspeedRow>& result);
void write_sweep_csv(std::ostream& out, const sweeps::SweepResult<sweeps::EfficiencyRow>& result);
void write_sweep_json(std::ostream& out, const sweeps::SweepResult<sweeps::AirspeedRow>& result);
void write_sweep_json(std::ostream& out, const sweeps::SweepResult<sweeps::EfficiencyRow>& result);

/// JSON object with CruisePlan field names; non-finite values become null.
std::string plan_json(const CruisePlan& plan, const ScenarioConfig& scenario, double eta_min, double range_m);

} // namespace voltcruise::format
