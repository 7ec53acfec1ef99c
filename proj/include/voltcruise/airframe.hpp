#pragma once

namespace voltcruise {

/// Airframe constants for steady level cruise. All SI.
struct AircraftParams {
    double wing_area_m2 = 0.0;
    double cd0 = 0.0;            ///< profile drag coefficient
    double cd2 = 0.0;            ///< induced drag coefficient
    double cl_max = 0.0;
    double v_max_rated_mps = 0.0;
    double v_div_mps = 0.0;      ///< drag-divergence airspeed
    double weight_N = 0.0;       ///< constant over cruise

    /// @throws DomainError naming the first non-positive field
    void validate() const;
};

struct SpeedEnvelope {
    double v_stall_mps = 0.0;
    double v_max_mps = 0.0;

    /// True when stall speed lies strictly below the maximum speed.
    [[nodiscard]] bool non_empty() const { return v_stall_mps < v_max_mps; }
    [[nodiscard]] bool contains(double v) const { return v_stall_mps < v && v < v_max_mps; }
};

/// Aerodynamic state at one airspeed.
struct AeroPoint {
    double airspeed_mps = 0.0;
    double cl = 0.0;
    double cd = 0.0;
    double drag_N = 0.0;
    double drag_dv = 0.0;   ///< dD/dv [N s/m]
    double drag_dvv = 0.0;  ///< d2D/dv2 [N s^2/m^2]
};

namespace airframe {

double stall_speed(double weight_N, double density, double wing_area_m2, double cl_max);

double max_speed(double v_div_mps, double v_max_rated_mps);

double lift_coefficient(double v, double weight_N, double density, double wing_area_m2);

/// Drag polar C_D = C_D0 + C_D2 C_L^2 with its first two airspeed derivatives.
AeroPoint drag(double v, const AircraftParams& params, double density);

/// Airspeed where dD/dv = 0.
double min_drag_speed(const AircraftParams& params, double density);

SpeedEnvelope envelope(const AircraftParams& params, double density);

} // namespace airframe
} // namespace voltcruise
