#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "nuq/cli/commands.hpp"
#include "nuq/cli/toml_lite.hpp"
#include "nuq/errors.hpp"

using namespace nuq;
using namespace nuq::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("nuq_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> data_lines(const fs::path& p) {
  std::vector<std::string> out;
  std::istringstream in(slurp(p));
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

std::vector<double> numbers(const std::string& line) {
  std::vector<double> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(NUQ_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("TOML subset") {
    const auto j = parse_toml(R"(
# comment
title = "two \"flavors\""
[model]
mu = 1.0   # inline comment
omegas = [2.0, 2.5]
pair_cos = [
  [1, 0.5],
  [0.5, 1],
]
[run.extra]
steps = 1_000
on = true
)");
    CHECK(j["title"] == "two \"flavors\"");
    CHECK(j["model"]["mu"] == 1.0);
    CHECK(j["model"]["omegas"][1] == 2.5);
    CHECK(j["model"]["pair_cos"][0][1] == 0.5);
    CHECK(j["run"]["extra"]["steps"] == 1000);
    CHECK(j["run"]["extra"]["on"] == true);
    CHECK_THROWS_WITH_AS(parse_toml("a = 1\nb = \n"), doctest::Contains("line 2"), ConfigError);
    CHECK_THROWS_AS(parse_toml("a = 1\na = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_toml("[x\n"), ConfigError);
    CHECK_THROWS_AS(parse_toml("s = \"open\n"), ConfigError);
  }

  TEST_CASE("config overlay and validation") {
    const auto base = reference_config();
    CHECK_NOTHROW(base.validate());
    CHECK(base.calibration_shots_resolved() == 150000);
    const auto c = config_from_json(nlohmann::json::parse(
        R"({"run": {"encoding": "qutrit", "steps": 4, "initial": "tau,e"}, "mixing": {"theta12_deg": 30}})"));
    CHECK(c.encoding == EncodingKind::Qutrit);
    CHECK(c.steps == 4);
    CHECK(c.calibration_shots_resolved() == 30000);
    CHECK(c.flavors() == std::vector<int>{2, 0});
    CHECK(c.params.mixing.theta12 == doctest::Approx(std::numbers::pi / 6));
    CHECK(c.mitigation_options().source == mitigate::PlSource::Fit);

    CHECK_THROWS_WITH_AS(config_from_json(nlohmann::json::parse(R"({"run": {"initial": "e,nu"}})")).validate(),
                         doctest::Contains("run.initial"), ConfigError);
    CHECK_THROWS_WITH_AS(config_from_json(nlohmann::json::parse(R"({"run": {"initial": "e"}})")).validate(),
                         doctest::Contains("run.initial"), ConfigError);
    CHECK_THROWS_WITH_AS(config_from_json(nlohmann::json::parse(R"({"run": {"stepz": 3}})")),
                         doctest::Contains("run.stepz"), ConfigError);
    CHECK_THROWS_WITH_AS(config_from_json(nlohmann::json::parse(R"({"run": {"dt": "fast"}})")),
                         doctest::Contains("run.dt"), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"run": {"dt": -1}})")).validate(), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"run": {"steps": -1}})")).validate(), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"noise": {"per_layer_p": 2}})")).validate(), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"format_version": 7})")), ConfigError);
  }

  TEST_CASE("mass splittings in the config") {
    const auto c = config_from_json(nlohmann::json::parse(
        R"({"model": {"masses": {"delta12": 7.4e-5, "delta13": 2.5e-3, "delta23": 2.426e-3, "momenta": [1, 2, 4]}},
            "run": {"initial": "e,mu,tau"}})"));
    CHECK(c.params.size() == 3);
    CHECK_NOTHROW(c.validate());
  }

  TEST_CASE("shipped config matches the built-in defaults") {
    auto c = load_config(std::string(NUQ_CONFIG_DIR) + "/default.toml");
    auto ref = reference_config();
    ref.out = c.out;
    CHECK(c.to_json() == ref.to_json());
  }

  TEST_CASE("TOML and JSON configs load to the same thing") {
    const auto dir = scratch("load");
    std::ofstream(dir / "a.toml") << "[run]\nsteps = 3\nencoding = \"qutrit\"\n[noise]\nper_layer_p = 0.02\n";
    std::ofstream(dir / "a.json") << R"({"run": {"steps": 3, "encoding": "qutrit"}, "noise": {"per_layer_p": 0.02}})";
    CHECK(load_config((dir / "a.toml").string()).to_json() == load_config((dir / "a.json").string()).to_json());
    CHECK_THROWS_AS(load_config((dir / "missing.toml").string()), ConfigError);
  }

  TEST_CASE("exact command on the default configuration") {
    auto c = reference_config();
    c.out = scratch("exact").string();
    const auto files = cmd_exact(c);
    REQUIRE(files.size() == 1);
    const auto text = slurp(files[0]);
    CHECK(text.rfind("# format_version: 1\n# config: {", 0) == 0);
    const auto lines = data_lines(files[0]);
    REQUIRE(lines.size() == 12);
    CHECK(lines[0] == R"(step,time,"e,e","e,mu","e,tau","mu,e","mu,mu","mu,tau","tau,e","tau,mu","tau,tau",leakage)");
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto v = numbers(lines[i]);
      REQUIRE(v.size() == 12);
      double s = 0;
      for (int k = 2; k < 11; ++k) s += v[k];
      CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
    c.steps = 0;
    const auto zero = data_lines(cmd_exact(c)[0]);
    REQUIRE(zero.size() == 2);
    CHECK(numbers(zero[1])[3] == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("trotter, bounds and circuit commands") {
    auto c = reference_config();
    c.out = scratch("misc").string();
    const auto tr = data_lines(cmd_trotter(c)[0]);
    CHECK(tr[0].substr(tr[0].size() - 9) == "deviation");
    CHECK(numbers(tr[1]).back() < 1e-12);
    CHECK(numbers(tr.back()).back() > 0.0);

    const auto b = nlohmann::json::parse(slurp(cmd_bounds(c)[0]));
    CHECK(b["r_for"] == 250);
    CHECK(b["format_version"] == 1);
    CHECK(b["config"]["run"]["steps"] == 10);

    const auto files = cmd_circuit(c);
    const auto g = nlohmann::json::parse(slurp(files[1]));
    CHECK(g["per_two_body_step"]["CNOT"] == 34);
    c.connectivity = qcir::Connectivity::t_shape();
    CHECK(nlohmann::json::parse(slurp(cmd_circuit(c)[1]))["per_two_body_step"]["CNOT"] == 39);
  }

  TEST_CASE("mitigate writes every table and is byte-reproducible") {
    auto c = reference_config();
    c.steps = 3;
    c.resamples = 2;
    c.calibration_shots = 20000;
    c.bootstrap = 50;
    c.out = scratch("mit").string();
    const auto files = cmd_mitigate(c);
    std::vector<std::string> first;
    for (const auto& f : files) first.push_back(slurp(f));
    const auto again = cmd_mitigate(c);
    REQUIRE(again == files);
    for (std::size_t i = 0; i < files.size(); ++i) CHECK(slurp(files[i]) == first[i]);
    const auto m = data_lines(fs::path(c.out) / "mitigated.csv");
    CHECK(m[0] == "step,time,state_label,p_exact,p_trotter,p_bare,p_bare_err,p_mit,p_mit_err");
    CHECK(m.size() == 1 + 4 * 9);
    const auto t = nlohmann::json::parse(slurp(fs::path(c.out) / "tvd.json"));
    CHECK(t["steps"].size() == 4);
  }

  TEST_CASE("binary exit codes") {
    const auto dir = scratch("bin");
    CHECK(run_cli("bounds --out " + dir.string()) == 0);
    std::ofstream(dir / "bad.toml") << "[run]\ninitial = \"e,nu\"\n";
    CHECK(run_cli("exact --config " + (dir / "bad.toml").string() + " --out " + dir.string()) == 2);
    CHECK(run_cli("exact --encoding ququart --out " + dir.string()) == 2);
    CHECK(run_cli("frobnicate") == 2);
    // 7 qubit pairs exceed the dense cap
    std::ofstream(dir / "big.toml") << "[model]\nomegas = [1, 2, 3, 4, 5, 6, 7]\n[run]\ninitial = \"e,e,e,e,e,e,e\"\n";
    CHECK(run_cli("exact --config " + (dir / "big.toml").string() + " --out " + dir.string()) == 3);
  }
}
