#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "nuq/mitigate.hpp"

namespace nuq::cli {

inline constexpr int kFormatVersion = 1;

/// Everything a subcommand needs. Units: times in 1/mu, frequencies in mu.
struct RunConfig {
  OscillationParams params;
  EncodingKind encoding = EncodingKind::QubitPair;
  std::string initial = "e,mu";
  double dt = 0.5;
  int steps = 10;
  qcir::Connectivity connectivity;
  qcir::PmnsFlavor pmns_circuit = qcir::PmnsFlavor::Cnot;
  sim::NoiseModel noise{0.05, 0.95, 0.0};
  std::int64_t shots = 5120;
  int resamples = 30;
  std::optional<std::int64_t> calibration_shots;  // default by encoding
  std::uint64_t seed = 1234;
  std::string out = "out";
  std::string pl_source = "auto";  // auto | direct | fit
  std::string fit_target = "raw";  // raw | normalized
  double depth_scale = 1.0;
  int bootstrap = 1000;
  double band = 0.90;
  std::optional<double> bounds_t;  // default steps * dt
  double bounds_epsilon = 0.1;

  std::vector<int> flavors() const;
  Encoding encoding_for() const { return Encoding(encoding, static_cast<int>(params.size())); }
  std::int64_t calibration_shots_resolved() const;
  TrotterPlan plan() const;
  sim::RunSpec run_spec() const;
  mitigate::Options mitigation_options() const;

  /// Throws ConfigError naming the field.
  void validate() const;
  nlohmann::json to_json() const;
};

/// The two-neutrino experiment defaults.
RunConfig reference_config();

/// Overlay a JSON document (lowered TOML or native JSON) on `base`.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = reference_config());
/// .json files are read as JSON, anything else as TOML.
RunConfig load_config(const std::string& path);

}  // namespace nuq::cli
