#pragma once

namespace voltcruise::atmosphere {

/// Upper bound (exclusive) of the tropospheric model, meters.
inline constexpr double kTroposphereTopM = 11000.0;

struct AtmosphereSample {
    double altitude_m = 0.0;
    double density_kg_m3 = 0.0;
};

/**
 * @brief NASA tropospheric density model.
 *
 * rho(h) = 101.29 (288.14 - 0.00649 h)^4.256 / (0.2869 * 288.08^5.256)
 *
 * @param altitude_m Geometric altitude [m], must lie in [0, 11000)
 * @return Air density [kg/m^3]
 * @throws DomainError outside the tropospheric range
 */
double air_density(double altitude_m);

AtmosphereSample sample(double altitude_m);

} // namespace voltcruise::atmosphere
