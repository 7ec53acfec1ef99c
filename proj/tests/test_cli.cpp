#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "voltcruise/commands.hpp"
#include "voltcruise/scenario.hpp"

using namespace voltcruise;

namespace {

const std::string kGolden = VOLTCRUISE_CONFIG_DIR "/cx300_montreal_ottawa.json";
const std::string kAltitudeVariant = VOLTCRUISE_CONFIG_DIR "/cx300_montreal_ottawa_altitude_density.json";

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "voltcruise");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("voltcruise_test_" + name)).string();
}

std::string write_variant(const std::string& name, const std::function<void(ScenarioConfig&)>& edit) {
    ScenarioConfig s = load_scenario(kGolden);
    edit(s);
    const std::string path = temp_path(name);
    std::ofstream(path) << dump_scenario(s);
    return path;
}

double field(const std::string& report, const std::string& key) {
    std::istringstream in(report);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key + ": ", 0) == 0) {
            return std::stod(line.substr(key.size() + 2));
        }
    }
    return std::nan("");
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("plan on the golden scenario") {
    const auto r = run({"plan", "--config", kGolden});
    CHECK(r.code == cli::kFeasible);
    CHECK(field(r.out, "v_opt_mps") == doctest::Approx(52.8).epsilon(0.05 / 52.8));
    CHECK(field(r.out, "tf_s") == doctest::Approx(2840.0).epsilon(1.0 / 2840.0));
    CHECK(field(r.out, "energy_J") == doctest::Approx(3.125e8).epsilon(1e-3));
    CHECK(field(r.out, "energy_kWh") == doctest::Approx(field(r.out, "energy_J") / 3.6e6));
    CHECK(field(r.out, "qf_C") == doctest::Approx(3.21e5).epsilon(1e-3));
    CHECK(r.out.find("(override)") != std::string::npos);
    CHECK(r.out.find("feasible: true") != std::string::npos);
    CHECK(run({"plan", "--config", kGolden}).out == r.out);
}

TEST_CASE("plan JSON mirrors plan field names") {
    const auto r = run({"plan", "--config", kGolden, "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["v_opt_mps"].get<double>() == doctest::Approx(52.817221921126155));
    CHECK(j["feasibility"]["feasible"].get<bool>());
    CHECK(j["feasibility"].contains("qf_margin"));
    CHECK(j["feasibility"].contains("z_tf"));
    CHECK(j["density_source"] == "override");
}

TEST_CASE("zero-length segment") {
    const auto path = write_variant("zero.json", [](ScenarioConfig& s) { s.mission.xf_m = 0.0; });
    const auto r = run({"plan", "--config", path});
    CHECK(r.code == cli::kFeasible);
    CHECK(field(r.out, "tf_s") == 0.0);
    CHECK(field(r.out, "energy_J") == 0.0);
    CHECK(field(r.out, "qf_C") == doctest::Approx(700000.0));
}

TEST_CASE("Q0 at Q_min exits infeasible") {
    const auto path = write_variant("qmin.json", [](ScenarioConfig& s) { s.mission.q0_C = 196000.0; });
    const auto r = run({"plan", "--config", path});
    CHECK(r.code == cli::kInfeasible);
    CHECK(r.out.find("feasible: false") != std::string::npos);
}

TEST_CASE("input errors exit 1") {
    const std::string bad = temp_path("bad.json");
    std::ofstream(bad) << "{ \"aircraft\": ";
    CHECK(run({"plan", "--config", bad}).code == cli::kInputError);
    CHECK(run({"plan"}).code == cli::kInputError);
    CHECK(run({"plan", "--config", "/nonexistent.json"}).code == cli::kInputError);
    CHECK(run({"bogus"}).code == cli::kInputError);
    CHECK(run({"atmosphere", "--altitude", "20000"}).code == cli::kInputError);

    const auto neg = write_variant("neg.json", [](ScenarioConfig& s) { s.aircraft.wing_area_m2 = -30.0; });
    const auto r = run({"plan", "--config", neg});
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("wing_area_m2") != std::string::npos);
}

TEST_CASE("atmosphere prints six significant digits") {
    const auto r = run({"atmosphere", "--altitude", "1500"});
    CHECK(r.code == 0);
    CHECK(r.out == "1.05969\n");
}

TEST_CASE("simulate writes the trajectory and a summary") {
    const std::string csv = temp_path("traj.csv");
    const auto r = run({"simulate", "--config", kGolden, "--step", "0.1", "--out", csv});
    CHECK(r.code == cli::kFeasible);
    const auto pos = r.out.find("mismatch_rel_q0=");
    REQUIRE(pos != std::string::npos);
    const double fine = std::stod(r.out.substr(pos + 16));
    CHECK(fine < 1e-6);

    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t_s,x_m,Q_C,U_V,i_A,P_W");

    // At 10 s the golden truncation error is already below roundoff; 300 s exposes it.
    const auto coarse = run({"simulate", "--config", kGolden, "--step", "300", "--out", csv});
    const double coarse_err = std::stod(coarse.out.substr(coarse.out.find("mismatch_rel_q0=") + 16));
    CHECK(coarse_err > fine);
}

TEST_CASE("simulate with constant voltage gives affine charge") {
    const auto path = write_variant("a0.json", [](ScenarioConfig& s) { s.battery.a_V_per_C = 0.0; });
    const auto r = run({"simulate", "--config", path, "--step", "5"});
    CHECK(r.code == cli::kFeasible);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() > 10);
    std::vector<double> t;
    std::vector<double> q;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        std::istringstream row(rows[k]);
        std::string cell;
        std::getline(row, cell, ',');
        t.push_back(std::stod(cell));
        std::getline(row, cell, ',');
        std::getline(row, cell, ',');
        q.push_back(std::stod(cell));
    }
    const double slope = (q.back() - q.front()) / (t.back() - t.front());
    for (std::size_t k = 0; k < t.size(); ++k) {
        CHECK(q[k] == doctest::Approx(q.front() + slope * (t[k] - t.front())).epsilon(1e-10));
    }
}

TEST_CASE("simulate reports depletion with exit 2") {
    const auto path = write_variant("long.json", [](ScenarioConfig& s) { s.mission.xf_m = 400000.0; });
    const std::string csv = temp_path("depleted.csv");
    const auto r = run({"simulate", "--config", path, "--out", csv, "--step", "1"});
    CHECK(r.code == cli::kInfeasible);
    std::ifstream in(csv);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("# depleted") != std::string::npos);
}

TEST_CASE("sweep presets") {
    const auto fig2 = run({"sweep", "--config", kGolden, "--experiment", "fig2"});
    CHECK(fig2.code == 0);
    const auto rows2 = lines(fig2.out);
    CHECK(rows2.size() == 50);
    CHECK(rows2[0] == "weight_N,altitude_m,v_opt_mps,density_kg_m3,v_stall_mps,v_max_mps,in_envelope");

    const auto fig3 = run({"sweep", "--config", kGolden, "--experiment", "fig3", "--format", "json"});
    CHECK(fig3.code == 0);
    const auto j = nlohmann::json::parse(fig3.out);
    CHECK(j["rows"].size() == 28);
    CHECK(j["metadata"]["scenario"] == "cx300_montreal_ottawa");
    CHECK(j["metadata"]["parameters"]["density_kg_m3"].get<double>() == 1.058);
}

TEST_CASE("single-cell sweep matches plan") {
    const auto sweep =
        run({"sweep", "--config", kAltitudeVariant, "--weights", "28000", "--altitudes", "1500"});
    const auto rows = lines(sweep.out);
    REQUIRE(rows.size() == 2);
    const auto plan = run({"plan", "--config", kAltitudeVariant});
    std::ostringstream expected_prefix;
    expected_prefix << "28000,1500,";
    CHECK(rows[1].rfind(expected_prefix.str(), 0) == 0);
    const double v = std::stod(rows[1].substr(expected_prefix.str().size()));
    CHECK(v == field(plan.out, "v_opt_mps"));

    const auto eta = run({"sweep", "--config", kGolden, "--experiment", "fig3", "--weights", "28000", "--q0", "700000"});
    const auto erows = lines(eta.out);
    REQUIRE(erows.size() == 2);
    const double eta_min = std::stod(erows[1].substr(std::string("28000,7e+05,").size()));
    CHECK(eta_min == field(run({"plan", "--config", kGolden}).out, "min_required_efficiency"));
}

TEST_CASE("invalid sweep grid exits 1") {
    CHECK(run({"sweep", "--config", kGolden, "--weights", "28000,27000"}).code == cli::kInputError);
    CHECK(run({"sweep", "--config", kGolden, "--experiment", "fig9"}).code == cli::kInputError);
}

TEST_CASE("check cross-validates the golden scenario") {
    const auto r = run({"check", "--config", kGolden});
    CHECK(r.code == cli::kFeasible);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS grid-search") != std::string::npos);
    CHECK(r.out.find("PASS RK4") != std::string::npos);
    CHECK(r.out.find("PASS Pontryagin") != std::string::npos);
}

}
