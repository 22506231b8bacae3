#include "nuq/cli/config.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "nuq/cli/toml_lite.hpp"
#include "nuq/errors.hpp"

namespace nuq::cli {

namespace {

using nlohmann::json;

constexpr double kDeg = std::numbers::pi / 180.0;

void check_keys(const json& t, const std::string& table, const std::set<std::string>& allowed) {
  if (!t.is_object()) throw ConfigError(table, "must be a table");
  for (const auto& [k, v] : t.items())
    if (!allowed.count(k)) throw ConfigError(table.empty() ? k : table + "." + k, "unknown key");
}

template <class T>
T get(const json& t, const std::string& table, const std::string& key) {
  try {
    return t.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(table + "." + key, "has the wrong type");
  }
}

double get_number(const json& t, const std::string& table, const std::string& key) {
  if (!t.at(key).is_number()) throw ConfigError(table + "." + key, "must be a number");
  return t.at(key).get<double>();
}

std::int64_t get_int(const json& t, const std::string& table, const std::string& key) {
  const auto& v = t.at(key);
  if (!v.is_number_integer()) throw ConfigError(table + "." + key, "must be an integer");
  return v.get<std::int64_t>();
}

std::vector<double> get_vector(const json& t, const std::string& table, const std::string& key) {
  const auto& v = t.at(key);
  if (!v.is_array()) throw ConfigError(table + "." + key, "must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError(table + "." + key, "must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

RealMatrix get_matrix(const json& t, const std::string& table, const std::string& key) {
  const auto& v = t.at(key);
  const std::string f = table + "." + key;
  if (!v.is_array()) throw ConfigError(f, "must be an array of rows");
  const auto n = static_cast<Eigen::Index>(v.size());
  RealMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!v[i].is_array() || static_cast<Eigen::Index>(v[i].size()) != n) throw ConfigError(f, "must be square");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!v[i][j].is_number()) throw ConfigError(f, "entries must be numbers");
      m(i, j) = v[i][j].get<double>();
    }
  }
  return m;
}

double angle(const json& t, const std::string& key, double current) {
  const bool rad = t.contains(key), deg = t.contains(key + "_deg");
  if (rad && deg) throw ConfigError("mixing." + key, "given both in radians and degrees");
  if (rad) return get_number(t, "mixing", key);
  if (deg) return get_number(t, "mixing", key + "_deg") * kDeg;
  return current;
}

}  // namespace

std::vector<int> RunConfig::flavors() const {
  std::vector<int> f;
  try {
    f = parse_flavor_string(initial);
  } catch (const DomainError& e) {
    throw ConfigError("run.initial", e.what());
  }
  if (f.size() != params.size())
    throw ConfigError("run.initial", "has " + std::to_string(f.size()) + " flavors for " +
                                         std::to_string(params.size()) + " neutrinos");
  return f;
}

std::int64_t RunConfig::calibration_shots_resolved() const {
  if (calibration_shots) return *calibration_shots;
  return encoding == EncodingKind::QubitPair ? 150000 : 30000;
}

TrotterPlan RunConfig::plan() const { return TrotterPlan::lexicographic(static_cast<int>(params.size()), dt, steps); }

sim::RunSpec RunConfig::run_spec() const {
  sim::RunSpec s;
  s.params = params;
  s.enc = encoding_for();
  s.plan = plan();
  s.conn = connectivity;
  s.pmns = pmns_circuit;
  s.flavors = flavors();
  s.noise = noise;
  s.shots = shots;
  s.resamples = resamples;
  s.seed = seed;
  return s;
}

mitigate::Options RunConfig::mitigation_options() const {
  auto o = mitigate::Options::for_encoding(encoding);
  if (pl_source == "direct") o.source = mitigate::PlSource::Direct;
  if (pl_source == "fit") o.source = mitigate::PlSource::Fit;
  o.fit_target = fit_target == "normalized" ? mitigate::FitTarget::Normalized : mitigate::FitTarget::Raw;
  o.depth_scale = depth_scale;
  o.bootstrap = bootstrap;
  o.band = band;
  o.seed = seed;
  return o;
}

void RunConfig::validate() const {
  try {
    params.validate();
  } catch (const DomainError& e) {
    throw ConfigError("model", e.what());
  }
  flavors();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("run.dt", "must be > 0");
  if (steps < 0) throw ConfigError("run.steps", "must be >= 0");
  try {
    noise.validate();
  } catch (const DomainError& e) {
    throw ConfigError("noise", e.what());
  }
  if (shots <= 0) throw ConfigError("sampling.shots", "must be > 0");
  if (resamples <= 0) throw ConfigError("sampling.resamples", "must be > 0");
  if (calibration_shots_resolved() <= 0) throw ConfigError("sampling.calibration_shots", "must be > 0");
  if (pl_source != "auto" && pl_source != "direct" && pl_source != "fit")
    throw ConfigError("mitigation.pl_source", "must be auto, direct or fit");
  if (fit_target != "raw" && fit_target != "normalized")
    throw ConfigError("mitigation.fit_target", "must be raw or normalized");
  if (!(depth_scale > 0.0)) throw ConfigError("mitigation.depth_scale", "must be > 0");
  if (bootstrap < 0) throw ConfigError("mitigation.bootstrap", "must be >= 0");
  if (!(band > 0.0 && band < 1.0)) throw ConfigError("mitigation.band", "must be in (0, 1)");
  if (bounds_t && !(*bounds_t > 0.0)) throw ConfigError("bounds.t", "must be > 0");
  if (!(bounds_epsilon > 0.0)) throw ConfigError("bounds.epsilon", "must be > 0");
  if (connectivity.kind == qcir::Connectivity::Kind::TShape && encoding == EncodingKind::QubitPair &&
      params.size() != 2)
    throw ConfigError("run.connectivity", "t connectivity needs exactly two neutrinos");
}

json RunConfig::to_json() const {
  json j;
  json pc = json::array();
  for (Eigen::Index i = 0; i < params.pair_cos.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < params.pair_cos.cols(); ++k) row.push_back(params.pair_cos(i, k));
    pc.push_back(row);
  }
  j["model"] = {{"mu", params.mu}, {"omegas", params.omegas}, {"b3", params.b3}, {"b8", params.b8}, {"pair_cos", pc}};
  j["mixing"] = {{"theta12", params.mixing.theta12},
                 {"theta13", params.mixing.theta13},
                 {"theta23", params.mixing.theta23},
                 {"delta_cp", params.mixing.delta_cp}};
  j["run"] = {{"encoding", to_string(encoding)},
              {"initial", initial},
              {"dt", dt},
              {"steps", steps},
              {"connectivity", qcir::to_string(connectivity)},
              {"pmns_circuit", pmns_circuit == qcir::PmnsFlavor::Cnot ? "cnot" : "cross_resonance"},
              {"seed", seed},
              {"out", out}};
  j["noise"] = {{"per_layer_p", noise.per_layer_p}, {"spam_s", noise.spam_s}, {"per_gate_p", noise.per_gate_p}};
  j["sampling"] = {{"shots", shots}, {"resamples", resamples}, {"calibration_shots", calibration_shots_resolved()}};
  j["mitigation"] = {{"pl_source", pl_source},
                     {"fit_target", fit_target},
                     {"depth_scale", depth_scale},
                     {"bootstrap", bootstrap},
                     {"band", band}};
  j["bounds"] = {{"t", bounds_t.value_or(steps * dt)}, {"epsilon", bounds_epsilon}};
  return j;
}

RunConfig reference_config() {
  RunConfig c;
  c.params.mu = 1.0;
  c.params.omegas = {2.0, 2.5};
  c.params.b3 = 0.025483;
  c.params.b8 = 0.999567;
  c.params.mixing = Mixing::from_degrees(33.44, 8.57, 49.2, 0.0);
  c.params.pair_cos = OscillationParams::default_pair_cos(2);
  return c;
}

RunConfig config_from_json(const json& j, RunConfig c) {
  check_keys(j, "", {"format_version", "model", "mixing", "run", "noise", "sampling", "mitigation", "bounds"});
  if (j.contains("format_version") && (!j["format_version"].is_number_integer() || j["format_version"] != kFormatVersion))
    throw ConfigError("format_version", "unsupported (expected " + std::to_string(kFormatVersion) + ")");

  if (j.contains("model")) {
    const auto& m = j["model"];
    check_keys(m, "model", {"mu", "omegas", "b3", "b8", "pair_cos", "masses"});
    if (m.contains("mu")) c.params.mu = get_number(m, "model", "mu");
    const bool direct = m.contains("omegas") || m.contains("b3") || m.contains("b8");
    if (direct && m.contains("masses")) throw ConfigError("model.masses", "give either masses or omegas/b3/b8");
    if (m.contains("omegas")) c.params.omegas = get_vector(m, "model", "omegas");
    if (m.contains("b3")) c.params.b3 = get_number(m, "model", "b3");
    if (m.contains("b8")) c.params.b8 = get_number(m, "model", "b8");
    if (m.contains("pair_cos")) {
      c.params.pair_cos = get_matrix(m, "model", "pair_cos");
    } else if (static_cast<std::size_t>(c.params.pair_cos.rows()) != c.params.omegas.size() && !m.contains("masses")) {
      c.params.pair_cos = OscillationParams::default_pair_cos(c.params.omegas.size());
    }
    if (m.contains("masses")) {
      const auto& ms = m["masses"];
      check_keys(ms, "model.masses", {"delta12", "delta13", "delta23", "momenta"});
      for (const char* k : {"delta12", "delta13", "delta23", "momenta"})
        if (!ms.contains(k)) throw ConfigError(std::string("model.masses.") + k, "missing");
      const auto momenta = get_vector(ms, "model.masses", "momenta");
      RealMatrix pc = m.contains("pair_cos") ? c.params.pair_cos : RealMatrix();
      try {
        const Mixing mix = c.params.mixing;
        c.params = params_from_masses(get_number(ms, "model.masses", "delta12"), get_number(ms, "model.masses", "delta13"),
                                      get_number(ms, "model.masses", "delta23"), momenta, c.params.mu, mix, pc);
      } catch (const DomainError& e) {
        throw ConfigError("model.masses", e.what());
      }
    }
  }
  if (j.contains("mixing")) {
    const auto& m = j["mixing"];
    check_keys(m, "mixing", {"theta12", "theta13", "theta23", "delta_cp", "theta12_deg", "theta13_deg",
                             "theta23_deg", "delta_cp_deg"});
    auto& x = c.params.mixing;
    x.theta12 = angle(m, "theta12", x.theta12);
    x.theta13 = angle(m, "theta13", x.theta13);
    x.theta23 = angle(m, "theta23", x.theta23);
    x.delta_cp = angle(m, "delta_cp", x.delta_cp);
  }
  if (j.contains("run")) {
    const auto& r = j["run"];
    check_keys(r, "run", {"encoding", "initial", "dt", "steps", "connectivity", "pmns_circuit", "seed", "out"});
    if (r.contains("encoding")) {
      try {
        c.encoding = encoding_from_string(get<std::string>(r, "run", "encoding"));
      } catch (const DomainError& e) {
        throw ConfigError("run.encoding", e.what());
      }
    }
    if (r.contains("initial")) c.initial = get<std::string>(r, "run", "initial");
    if (r.contains("dt")) c.dt = get_number(r, "run", "dt");
    if (r.contains("steps")) c.steps = static_cast<int>(get_int(r, "run", "steps"));
    if (r.contains("connectivity")) {
      try {
        c.connectivity = qcir::connectivity_from_string(get<std::string>(r, "run", "connectivity"));
      } catch (const DomainError& e) {
        throw ConfigError("run.connectivity", e.what());
      }
    }
    if (r.contains("pmns_circuit")) {
      const auto v = get<std::string>(r, "run", "pmns_circuit");
      if (v == "cnot") c.pmns_circuit = qcir::PmnsFlavor::Cnot;
      else if (v == "cross_resonance") c.pmns_circuit = qcir::PmnsFlavor::CrossResonance;
      else throw ConfigError("run.pmns_circuit", "must be cnot or cross_resonance");
    }
    if (r.contains("seed")) {
      if (!r["seed"].is_number_integer() || r["seed"].get<long long>() < 0) throw ConfigError("run.seed", "must be a non-negative integer");
      c.seed = r["seed"].get<std::uint64_t>();
    }
    if (r.contains("out")) c.out = get<std::string>(r, "run", "out");
  }
  if (j.contains("noise")) {
    const auto& n = j["noise"];
    check_keys(n, "noise", {"per_layer_p", "spam_s", "per_gate_p"});
    if (n.contains("per_layer_p")) c.noise.per_layer_p = get_number(n, "noise", "per_layer_p");
    if (n.contains("spam_s")) c.noise.spam_s = get_number(n, "noise", "spam_s");
    if (n.contains("per_gate_p")) c.noise.per_gate_p = get_number(n, "noise", "per_gate_p");
  }
  if (j.contains("sampling")) {
    const auto& s = j["sampling"];
    check_keys(s, "sampling", {"shots", "resamples", "calibration_shots"});
    if (s.contains("shots")) c.shots = get_int(s, "sampling", "shots");
    if (s.contains("resamples")) c.resamples = static_cast<int>(get_int(s, "sampling", "resamples"));
    if (s.contains("calibration_shots")) c.calibration_shots = get_int(s, "sampling", "calibration_shots");
  }
  if (j.contains("mitigation")) {
    const auto& m = j["mitigation"];
    check_keys(m, "mitigation", {"pl_source", "fit_target", "depth_scale", "bootstrap", "band"});
    if (m.contains("pl_source")) c.pl_source = get<std::string>(m, "mitigation", "pl_source");
    if (m.contains("fit_target")) c.fit_target = get<std::string>(m, "mitigation", "fit_target");
    if (m.contains("depth_scale")) c.depth_scale = get_number(m, "mitigation", "depth_scale");
    if (m.contains("bootstrap")) c.bootstrap = static_cast<int>(get_int(m, "mitigation", "bootstrap"));
    if (m.contains("band")) c.band = get_number(m, "mitigation", "band");
  }
  if (j.contains("bounds")) {
    const auto& b = j["bounds"];
    check_keys(b, "bounds", {"t", "epsilon"});
    if (b.contains("t")) c.bounds_t = get_number(b, "bounds", "t");
    if (b.contains("epsilon")) c.bounds_epsilon = get_number(b, "bounds", "epsilon");
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  json j;
  const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (is_json) {
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError("--config", std::string("invalid JSON: ") + e.what());
    }
  } else {
    j = parse_toml(text);
  }
  return config_from_json(j);
}

}  // namespace nuq::cli
