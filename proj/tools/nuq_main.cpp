#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nuq/cli/commands.hpp"
#include "nuq/errors.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::string> encoding, connectivity, out;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> shots;
  std::optional<int> steps;
  std::optional<double> dt;
};

void add_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "TOML or JSON config file (reference defaults when omitted)");
  cmd->add_option("--encoding", o.encoding, "qutrit or qubitpair");
  cmd->add_option("--connectivity", o.connectivity, "all or t");
  cmd->add_option("--seed", o.seed, "base seed");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--shots", o.shots, "shots per noise resample");
  cmd->add_option("--steps", o.steps, "number of Trotter steps L");
  cmd->add_option("--dt", o.dt, "time step in 1/mu");
}

nuq::cli::RunConfig resolve(const Overrides& o) {
  auto c = o.config.empty() ? nuq::cli::reference_config() : nuq::cli::load_config(o.config);
  nlohmann::json j = nlohmann::json::object();
  if (o.encoding) j["run"]["encoding"] = *o.encoding;
  if (o.connectivity) j["run"]["connectivity"] = *o.connectivity;
  if (o.out) j["run"]["out"] = *o.out;
  if (o.seed) j["run"]["seed"] = *o.seed;
  if (o.steps) j["run"]["steps"] = *o.steps;
  if (o.dt) j["run"]["dt"] = *o.dt;
  if (o.shots) j["sampling"]["shots"] = *o.shots;
  return nuq::cli::config_from_json(j, c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-flavor collective neutrino oscillations on qubit and qutrit circuits"};
  app.require_subcommand(1);
  Overrides o;
  using Fn = std::vector<std::string> (*)(const nuq::cli::RunConfig&);
  const std::pair<const char*, Fn> commands[] = {
      {"exact", nuq::cli::cmd_exact},       {"trotter", nuq::cli::cmd_trotter},
      {"simulate", nuq::cli::cmd_simulate}, {"mitigate", nuq::cli::cmd_mitigate},
      {"bounds", nuq::cli::cmd_bounds},     {"circuit", nuq::cli::cmd_circuit},
  };
  const char* help[] = {"exact dense evolution table",
                        "ideal Trotter table with deviation from exact",
                        "noisy sampled runs and Clifford calibration",
                        "simulate, then mitigate and score against the Trotter ideal",
                        "Trotter error bound constants and step count",
                        "circuit export and gate counts"};
  Fn chosen = nullptr;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, help[i]);
    add_options(sub, o);
    sub->callback([&chosen, fn = commands[i].second] { chosen = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const auto c = resolve(o);
    for (const auto& f : chosen(c)) std::cout << f << "\n";
  } catch (const nuq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const nuq::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const nuq::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const nuq::CapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return 3;
  } catch (const nuq::ConstructionError& e) {
    std::cerr << "circuit construction: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
