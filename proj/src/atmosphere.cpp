#include "voltcruise/atmosphere.hpp"

#include <cmath>
#include <sstream>

#include "voltcruise/errors.hpp"

namespace voltcruise::atmosphere {

namespace {
// Coefficients as published for the NASA Glenn tropospheric model.
constexpr double kPressureCoeff = 101.29;
constexpr double kSeaLevelTempK = 288.14;
constexpr double kLapseRate = 0.00649;
constexpr double kNumeratorExponent = 4.256;
constexpr double kGasConstant = 0.2869;
constexpr double kReferenceTempK = 288.08;
constexpr double kDenominatorExponent = 5.256;
} // namespace

double air_density(double altitude_m) {
    if (!(altitude_m >= 0.0 && altitude_m < kTroposphereTopM)) {
        std::ostringstream msg;
        msg << "altitude " << altitude_m << " m outside valid range [0, " << kTroposphereTopM << ") m";
        throw DomainError(msg.str());
    }
    const double temperature = kSeaLevelTempK - kLapseRate * altitude_m;
    return kPressureCoeff * std::pow(temperature, kNumeratorExponent) /
           (kGasConstant * std::pow(kReferenceTempK, kDenominatorExponent));
}

AtmosphereSample sample(double altitude_m) {
    return {altitude_m, air_density(altitude_m)};
}

} // namespace voltcruise::atmosphere
