#include "voltcruise/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "voltcruise/atmosphere.hpp"
#include "voltcruise/errors.hpp"
#include "voltcruise/format.hpp"
#include "voltcruise/oracle.hpp"
#include "voltcruise/planner.hpp"
#include "voltcruise/scenario.hpp"
#include "voltcruise/sweeps.hpp"

namespace voltcruise::cli {

namespace {

using format::number;

struct Options {
    std::string config;
    std::string out_path;
    std::string output_format = "text";
    std::string experiment = "fig2";
    double step_s = 0.1;
    std::optional<double> airspeed;
    double altitude_m = 0.0;
    std::vector<double> weights;
    std::vector<double> altitudes;
    std::vector<double> q0_values;
    std::size_t threads = 1;
};

// Output file or the fallback stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw ConfigError("cannot open output file " + path, "--out", 0);
            }
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }
    [[nodiscard]] bool is_file() const { return file_ != nullptr; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

std::pair<double, double> efficiency_and_range(const ScenarioConfig& s, double density) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (!(s.mission.q0_C > s.battery.q_min_C)) {
        return {nan, s.mission.q0_C == s.battery.q_min_C ? 0.0 : nan};
    }
    return {planner::min_required_efficiency(s.mission, s.aircraft, s.battery, density),
            planner::max_feasible_range(s.aircraft, s.battery, s.mission.q0_C, density)};
}

int cmd_plan(const Options& opt, std::ostream& out) {
    const ScenarioConfig s = load_scenario(opt.config);
    const CruisePlan plan = planner::plan_cruise(s.mission, s.aircraft, s.battery, s.density_override);
    const auto [eta_min, range_m] = efficiency_and_range(s, plan.density_kg_m3);

    if (opt.output_format == "json") {
        out << format::plan_json(plan, s, eta_min, range_m);
    } else {
        const FeasibilityReport& f = plan.feasibility;
        out << "scenario: " << (s.name.empty() ? opt.config : s.name) << '\n'
            << "density_kg_m3: " << number(plan.density_kg_m3)
            << (s.density_override ? " (override)" : " (altitude model)") << '\n'
            << "v_stall_mps: " << number(plan.envelope.v_stall_mps) << '\n'
            << "v_max_mps: " << number(plan.envelope.v_max_mps) << '\n'
            << "v_opt_mps: " << number(plan.v_opt_mps) << '\n'
            << "tf_s: " << number(plan.tf_s) << '\n'
            << "drag_N: " << number(plan.drag_N) << '\n'
            << "energy_J: " << number(plan.energy_J) << '\n'
            << "energy_kWh: " << number(plan.energy_J / 3.6e6) << '\n'
            << "qf_C: " << number(plan.qf_C) << '\n'
            << "min_required_efficiency: " << number(eta_min) << '\n'
            << "max_feasible_range_m: " << number(range_m) << '\n'
            << "speed_lower_margin: " << number(f.speed_lower_margin) << '\n'
            << "speed_upper_margin: " << number(f.speed_upper_margin) << '\n'
            << "q0_margin: " << number(f.q0_margin) << '\n'
            << "qf_margin: " << number(f.qf_margin) << '\n'
            << "z_tf: " << (f.z_tf ? number(*f.z_tf) : std::string("n/a")) << '\n'
            << "feasible: " << (f.feasible ? "true" : "false") << '\n';
    }
    return plan.feasibility.feasible ? kFeasible : kInfeasible;
}

int cmd_simulate(const Options& opt, std::ostream& out, std::ostream& err) {
    const ScenarioConfig s = load_scenario(opt.config);
    const CruisePlan optimum = planner::plan_cruise(s.mission, s.aircraft, s.battery, s.density_override);
    const double v = opt.airspeed.value_or(optimum.v_opt_mps);
    const CruisePlan plan = planner::plan_at_speed(s.mission, s.aircraft, s.battery, optimum.density_kg_m3, v);

    oracle::IntegrationOptions io;
    io.charge_floor_C = s.battery.q_min_C;
    const oracle::ChargeTrajectory traj =
        oracle::integrate_charge(s.mission, s.aircraft, s.battery, plan.density_kg_m3, v, opt.step_s, io);

    Sink sink(opt.out_path, out);
    format::write_trajectory_csv(sink.stream(), traj);
    std::ostream& summary = sink.is_file() ? out : err;

    if (traj.depleted) {
        summary << "depleted: charge reached q_min_C=" << number(s.battery.q_min_C)
                << " at t_s=" << number(traj.depletion_time_s) << " x_m=" << number(traj.depletion_distance_m)
                << " before x_f\n";
        return kInfeasible;
    }
    const double q_rk4 = traj.final_state().charge_C;
    summary << "airspeed_mps=" << number(v) << " step_s=" << number(opt.step_s) << " rk4_qf_C=" << number(q_rk4)
            << " closed_form_qf_C=" << number(plan.qf_C)
            << " mismatch_rel_q0=" << number(std::abs(q_rk4 - plan.qf_C) / s.mission.q0_C) << '\n';
    return kFeasible;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
    const ScenarioConfig s = load_scenario(opt.config);
    if (opt.experiment != "fig2" && opt.experiment != "fig3") {
        throw DomainError("--experiment must be fig2 or fig3");
    }
    Sink sink(opt.out_path, out);
    const bool json = opt.output_format == "json";

    if (opt.experiment == "fig2") {
        sweeps::SweepGrid grid = sweeps::airspeed_preset();
        if (!opt.weights.empty()) grid.weights_N = opt.weights;
        if (!opt.altitudes.empty()) grid.altitudes_m = opt.altitudes;
        auto result = sweeps::sweep_airspeed_vs_altitude(grid, s.aircraft, s.battery, opt.threads);
        result.metadata.scenario = s.name;
        json ? format::write_sweep_json(sink.stream(), result) : format::write_sweep_csv(sink.stream(), result);
    } else {
        sweeps::SweepGrid grid = sweeps::efficiency_preset();
        if (!opt.weights.empty()) grid.weights_N = opt.weights;
        if (!opt.q0_values.empty()) grid.q0_values_C = opt.q0_values;
        auto result =
            sweeps::sweep_min_eta_vs_weight(grid, s.mission, s.aircraft, s.battery, s.density(), opt.threads);
        result.metadata.scenario = s.name;
        json ? format::write_sweep_json(sink.stream(), result) : format::write_sweep_csv(sink.stream(), result);
    }
    return kFeasible;
}

int cmd_atmosphere(const Options& opt, std::ostream& out) {
    out << std::setprecision(6) << atmosphere::air_density(opt.altitude_m) << '\n';
    return kFeasible;
}

int cmd_check(const Options& opt, std::ostream& out) {
    const ScenarioConfig s = load_scenario(opt.config);
    const CruisePlan plan = planner::plan_cruise(s.mission, s.aircraft, s.battery, s.density_override);
    bool verified = true;
    auto report = [&](bool ok, const std::string& what) {
        out << (ok ? "PASS " : "FAIL ") << what << '\n';
        verified = verified && ok;
    };

    report(true, "config " + opt.config + " is valid");
    if (plan.envelope.non_empty()) {
        const auto grid =
            oracle::grid_search_optimal_speed(s.mission, s.aircraft, s.battery, plan.density_kg_m3, 1e-3);
        const double dv = std::abs(grid.v_best_mps - plan.v_opt_mps);
        report(dv <= 1e-3, "grid-search airspeed " + number(grid.v_best_mps) + " vs closed form " +
                               number(plan.v_opt_mps) + " (|dv|=" + number(dv) + ")");
    }
    if (std::isfinite(plan.qf_C)) {
        const auto traj = oracle::integrate_charge(s.mission, s.aircraft, s.battery, plan.density_kg_m3,
                                                   plan.v_opt_mps, opt.step_s);
        if (traj.completed()) {
            const double rel = std::abs(traj.final_state().charge_C - plan.qf_C) / s.mission.q0_C;
            report(rel < 1e-6, "RK4 final charge " + number(traj.final_state().charge_C) + " vs closed form " +
                                   number(plan.qf_C) + " (rel=" + number(rel) + ")");
        }
    }
    const auto diag = oracle::pontryagin_residuals(plan, s.mission, s.aircraft, s.battery);
    const double h_rel = diag.hamiltonian_residual / diag.reference_power_W;
    const double s_rel = diag.stationarity_residual / diag.reference_power_W;
    report(h_rel < 1e-9 && s_rel < 1e-9,
           "Pontryagin residuals H=" + number(h_rel) + " stationarity=" + number(s_rel) + " (relative)");
    out << "feasible: " << (plan.feasibility.feasible ? "true" : "false") << '\n';

    if (!verified) {
        return kVerificationFailure;
    }
    return plan.feasibility.feasible ? kFeasible : kInfeasible;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Energy-optimal steady cruise planning for all-electric aircraft", "voltcruise"};
    app.require_subcommand(1);
    Options opt;

    auto add_config = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    };

    CLI::App* plan = app.add_subcommand("plan", "Optimal airspeed, final time, energy and feasibility");
    add_config(plan);
    plan->add_option("--format", opt.output_format, "Output format")->check(CLI::IsMember({"text", "json"}));

    CLI::App* simulate = app.add_subcommand("simulate", "RK4 charge trajectory as CSV");
    add_config(simulate);
    simulate->add_option("--step", opt.step_s, "Integration step [s]")->check(CLI::PositiveNumber);
    simulate->add_option("--out", opt.out_path, "CSV output path (default stdout)");
    simulate->add_option("--airspeed", opt.airspeed, "Fly this airspeed instead of the optimum [m/s]")
        ->check(CLI::PositiveNumber);

    CLI::App* sweep = app.add_subcommand("sweep", "Parameter sweeps over weight/altitude or weight/Q0");
    add_config(sweep);
    sweep->add_option("--experiment", opt.experiment, "fig2 (airspeed) or fig3 (minimum efficiency)")
        ->check(CLI::IsMember({"fig2", "fig3"}));
    sweep->add_option("--out", opt.out_path, "Output path (default stdout)");
    sweep->add_option("--format", opt.output_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--weights", opt.weights, "Weights [N]")->delimiter(',');
    sweep->add_option("--altitudes", opt.altitudes, "Altitudes [m] (fig2)")->delimiter(',');
    sweep->add_option("--q0", opt.q0_values, "Initial charges [C] (fig3)")->delimiter(',');
    sweep->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);

    CLI::App* atmo = app.add_subcommand("atmosphere", "Air density at an altitude");
    atmo->add_option("--altitude", opt.altitude_m, "Altitude [m]")->required();

    CLI::App* check = app.add_subcommand("check", "Validate a scenario and cross-check closed forms");
    add_config(check);
    check->add_option("--step", opt.step_s, "RK4 step [s]")->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kFeasible : kInputError;
    }

    try {
        if (*plan) return cmd_plan(opt, out);
        if (*simulate) return cmd_simulate(opt, out, err);
        if (*sweep) return cmd_sweep(opt, out);
        if (*atmo) return cmd_atmosphere(opt, out);
        if (*check) return cmd_check(opt, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace voltcruise::cli
