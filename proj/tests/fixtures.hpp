#pragma once

#include <cmath>
#include <random>

#include "voltcruise/airframe.hpp"
#include "voltcruise/battery.hpp"
#include "voltcruise/planner.hpp"

namespace voltcruise::testing {

// Aircraft, battery and mission of the CX300 Montreal-Ottawa cruise.
inline AircraftParams golden_aircraft() {
    return {30.0, 0.02, 0.05, 1.8, 78.6, 205.8, 28000.0};
}

inline BatteryParams golden_battery() {
    return {0.00028, 682.0, 979200.0, 196000.0, 781000.0, 0.85};
}

inline MissionSpec golden_mission() {
    return {1500.0, 0.0, 150000.0, 0.0, 700000.0};
}

inline constexpr double kGoldenDensity = 1.058;
inline constexpr double kMtowN = 28675.0;

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// Independent fixed-step RK4 of dQ/dt = -P / (eta (aQ + b)); used to check closed forms.
inline double reference_rk4(double q0, double power_W, const BatteryParams& bat, double duration_s, double step_s) {
    auto f = [&](double q) { return -power_W / (bat.eta * (bat.a_V_per_C * q + bat.b_V)); };
    const auto n = static_cast<long>(std::ceil(duration_s / step_s));
    const double h = duration_s / static_cast<double>(n);
    double q = q0;
    for (long k = 0; k < n; ++k) {
        const double k1 = f(q);
        const double k2 = f(q + 0.5 * h * k1);
        const double k3 = f(q + 0.5 * h * k2);
        const double k4 = f(q + h * k3);
        q += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return q;
}

struct RandomScenario {
    AircraftParams aircraft;
    BatteryParams battery;
    MissionSpec mission;
    double density = 0.0;
};

/// Golden scenario with W, h, eta and a drawn from the ranges used for oracle equivalence.
class ScenarioGenerator {
public:
    explicit ScenarioGenerator(unsigned seed) : rng_(seed) {}

    RandomScenario next();

private:
    std::mt19937_64 rng_;
};

} // namespace voltcruise::testing
