#include "voltcruise/airframe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "voltcruise/errors.hpp"

namespace voltcruise {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(name) + " must be positive and finite, got " + std::to_string(value));
    }
}

} // namespace

void AircraftParams::validate() const {
    require_positive(wing_area_m2, "wing_area_m2");
    require_positive(cd0, "cd0");
    require_positive(cd2, "cd2");
    require_positive(cl_max, "cl_max");
    require_positive(v_max_rated_mps, "v_max_rated_mps");
    require_positive(v_div_mps, "v_div_mps");
    require_positive(weight_N, "weight_N");
}

namespace airframe {

double stall_speed(double weight_N, double density, double wing_area_m2, double cl_max) {
    require_positive(weight_N, "weight_N");
    require_positive(density, "density");
    require_positive(wing_area_m2, "wing_area_m2");
    require_positive(cl_max, "cl_max");
    return std::sqrt(2.0 * weight_N / (density * wing_area_m2 * cl_max));
}

double max_speed(double v_div_mps, double v_max_rated_mps) {
    require_positive(v_div_mps, "v_div_mps");
    require_positive(v_max_rated_mps, "v_max_rated_mps");
    return std::min(v_div_mps, v_max_rated_mps);
}

double lift_coefficient(double v, double weight_N, double density, double wing_area_m2) {
    require_positive(v, "airspeed");
    require_positive(density, "density");
    require_positive(wing_area_m2, "wing_area_m2");
    return 2.0 * weight_N / (density * wing_area_m2 * v * v);
}

AeroPoint drag(double v, const AircraftParams& params, double density) {
    require_positive(v, "airspeed");
    require_positive(density, "density");
    const double rho_s = density * params.wing_area_m2;
    const double w2 = params.weight_N * params.weight_N;
    const double v2 = v * v;

    AeroPoint p;
    p.airspeed_mps = v;
    p.cl = lift_coefficient(v, params.weight_N, density, params.wing_area_m2);
    p.cd = params.cd0 + params.cd2 * p.cl * p.cl;
    p.drag_N = 0.5 * params.cd0 * rho_s * v2 + 2.0 * params.cd2 * w2 / (rho_s * v2);
    p.drag_dv = params.cd0 * rho_s * v - 4.0 * params.cd2 * w2 / (rho_s * v2 * v);
    p.drag_dvv = params.cd0 * rho_s + 12.0 * params.cd2 * w2 / (rho_s * v2 * v2);
    return p;
}

double min_drag_speed(const AircraftParams& params, double density) {
    require_positive(density, "density");
    return std::sqrt(2.0 * params.weight_N / (density * params.wing_area_m2) *
                     std::sqrt(params.cd2 / params.cd0));
}

SpeedEnvelope envelope(const AircraftParams& params, double density) {
    return {stall_speed(params.weight_N, density, params.wing_area_m2, params.cl_max),
            max_speed(params.v_div_mps, params.v_max_rated_mps)};
}

} // namespace airframe
} // namespace voltcruise
