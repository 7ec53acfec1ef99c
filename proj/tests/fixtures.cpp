#include "fixtures.hpp"

#include "voltcruise/atmosphere.hpp"

namespace voltcruise::testing {

RandomScenario ScenarioGenerator::next() {
    std::uniform_real_distribution<double> weight(22500.0, 28500.0);
    std::uniform_real_distribution<double> altitude(1000.0, 4000.0);
    std::uniform_real_distribution<double> eta(0.7, 0.95);
    std::uniform_real_distribution<double> log_a(std::log(1e-5), std::log(1e-3));
    std::bernoulli_distribution constant_voltage(0.25);

    RandomScenario s;
    s.aircraft = golden_aircraft();
    s.battery = golden_battery();
    s.mission = golden_mission();
    s.aircraft.weight_N = weight(rng_);
    s.mission.altitude_m = altitude(rng_);
    s.battery.eta = eta(rng_);
    const bool zero_a = constant_voltage(rng_);
    const double a = std::exp(log_a(rng_));
    s.battery.a_V_per_C = zero_a ? 0.0 : a;
    s.density = atmosphere::air_density(s.mission.altitude_m);
    return s;
}

} // namespace voltcruise::testing
