#include "nuq/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "nuq/errors.hpp"
#include "nuq/exact.hpp"
#include "nuq/qcir/builders.hpp"
#include "nuq/qcir/text_format.hpp"
#include "nuq/qcir/trotter_circuit.hpp"
#include "nuq/trotter.hpp"

namespace nuq::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const RunConfig& c) : path_(path), os_(path, std::ios::binary) {
    if (!os_) throw ConfigError("run.out", "cannot write '" + path.string() + "'");
    os_ << "# format_version: " << kFormatVersion << "\n# config: " << c.to_json().dump() << "\n";
  }
  CsvWriter& header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) os_ << (i ? "," : "") << csv_field(cols[i]);
    os_ << "\n";
    return *this;
  }
  CsvWriter& cell(const std::string& s) {
    sep();
    os_ << csv_field(s);
    return *this;
  }
  CsvWriter& cell(double x) {
    sep();
    os_ << format_double(x);
    return *this;
  }
  CsvWriter& cell(std::int64_t x) {
    sep();
    os_ << x;
    return *this;
  }
  CsvWriter& cell(int x) { return cell(static_cast<std::int64_t>(x)); }
  void end_row() {
    os_ << "\n";
    first_ = true;
  }
  std::string path() const { return path_.string(); }

 private:
  void sep() {
    if (!first_) os_ << ",";
    first_ = false;
  }
  fs::path path_;
  std::ofstream os_;
  bool first_ = true;
};

std::string write_json(const fs::path& path, const RunConfig& c, json body) {
  body["format_version"] = kFormatVersion;
  body["config"] = c.to_json();
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("run.out", "cannot write '" + path.string() + "'");
  os << body.dump(2) << "\n";
  return path.string();
}

fs::path prepare(const RunConfig& c) {
  c.validate();
  fs::path dir(c.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("run.out", "cannot create '" + c.out + "': " + ec.message());
  return dir;
}

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::size_t k = 0; k < total; ++k) out.push_back(flavor_label(k, n));
  return out;
}

std::string write_table(const fs::path& path, const RunConfig& c, const ProbabilityTable& t,
                        const ProbabilityTable* reference) {
  const auto names = labels(static_cast<int>(c.params.size()));
  std::vector<std::string> cols{"step", "time"};
  cols.insert(cols.end(), names.begin(), names.end());
  cols.push_back("leakage");
  if (reference) cols.push_back("deviation");
  CsvWriter w(path, c);
  w.header(cols);
  for (std::size_t s = 0; s < t.times.size(); ++s) {
    w.cell(static_cast<int>(s)).cell(t.times[s]);
    for (Eigen::Index k = 0; k < t.probs.cols(); ++k) w.cell(t.probs(s, k));
    w.cell(t.leakage[s]);
    if (reference) {
      // total variation distance to the exact flavor distribution
      double d = 0.0;
      for (Eigen::Index k = 0; k < t.probs.cols(); ++k) d += std::abs(t.probs(s, k) - reference->probs(s, k));
      w.cell(0.5 * d);
    }
    w.end_row();
  }
  return w.path();
}

struct Simulation {
  sim::RunSpec spec;
  sim::NoisyRun run;
  sim::CalibrationRun cal;
};

Simulation simulate(const RunConfig& c) {
  Simulation s;
  s.spec = c.run_spec();
  s.run = sim::noisy_trotter_run(s.spec);
  s.cal = sim::calibration_run(s.spec, c.calibration_shots_resolved());
  return s;
}

std::vector<std::string> write_simulation(const fs::path& dir, const RunConfig& c, const Simulation& s) {
  std::vector<std::string> files;
  const auto names = labels(static_cast<int>(c.params.size()));
  {
    CsvWriter w(dir / "bare.csv", c);
    w.header({"step", "time", "state_label", "count", "p_bare", "p_bare_err", "p_expected", "leak"});
    for (const auto& st : s.run.steps) {
      // expected and ideal are over the register; pick the physical entries
      const auto phys = s.spec.enc.physical_indices();
      for (std::size_t k = 0; k < names.size(); ++k) {
        w.cell(st.step).cell(st.time).cell(names[k]).cell(st.counts.count(names[k]));
        w.cell(st.counts.frequency(names[k])).cell(st.counts.std_error(names[k])).cell(st.expected[phys[k]]);
        w.cell(st.counts.leak());
        w.end_row();
      }
    }
    files.push_back(w.path());
  }
  {
    CsvWriter w(dir / "calibration.csv", c);
    w.header({"depth", "target", "shots", "pi_c", "pi_c_err", "pi_c_expected"});
    for (std::size_t l = 0; l < s.cal.targets.size(); ++l) {
      w.cell(static_cast<int>(l)).cell(s.cal.targets[l]).cell(s.cal.run.steps[l].counts.shots);
      w.cell(s.cal.pi_c_measured[l]).cell(s.cal.pi_c_err[l]).cell(s.cal.pi_c_expected[l]);
      w.end_row();
    }
    files.push_back(w.path());
  }
  json runs = json::array(), cals = json::array();
  for (const auto& st : s.run.steps) {
    json e = st.counts.to_json();
    e["step"] = st.step;
    e["time"] = st.time;
    runs.push_back(e);
  }
  for (std::size_t l = 0; l < s.cal.run.steps.size(); ++l) {
    json e = s.cal.run.steps[l].counts.to_json();
    e["depth"] = l;
    e["target"] = s.cal.targets[l];
    cals.push_back(e);
  }
  files.push_back(write_json(dir / "shots.json", c, {{"run", runs}, {"calibration", cals}}));
  return files;
}

json fit_json(const mitigate::Table& t, const mitigate::Options& o) {
  json j;
  j["pl_source"] = o.source == mitigate::PlSource::Direct ? "direct" : "fit";
  j["fit_target"] = o.fit_target == mitigate::FitTarget::Raw ? "raw" : "normalized";
  j["have_fit"] = t.have_fit;
  if (t.have_fit) {
    const auto& f = t.fit;
    json used = json::array();
    for (bool u : f.used) used.push_back(u);
    j["fit"] = {{"s", f.s},
                {"F", f.f},
                {"s_err", f.s_err},
                {"F_err", f.f_err},
                {"cov_log", f.cov_log},
                {"depth_scale", f.depth_scale},
                {"depths", f.depths},
                {"values", f.values},
                {"residuals", f.residuals},
                {"used", used},
                {"excluded_nonpositive", f.excluded_nonpositive},
                {"clipped", f.clipped}};
  }
  return j;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> cmd_exact(const RunConfig& c) {
  const auto dir = prepare(c);
  const auto r = exact_run(c.params, c.encoding_for(), c.flavors(), c.dt, c.steps);
  return {write_table(dir / "exact.csv", c, r.table, nullptr)};
}

std::vector<std::string> cmd_trotter(const RunConfig& c) {
  const auto dir = prepare(c);
  const auto enc = c.encoding_for();
  const auto ex = exact_run(c.params, enc, c.flavors(), c.dt, c.steps);
  const auto tr = trotter_run(c.params, c.plan(), enc, c.flavors());
  return {write_table(dir / "trotter.csv", c, tr.table, &ex.table)};
}

std::vector<std::string> cmd_simulate(const RunConfig& c) {
  const auto dir = prepare(c);
  return write_simulation(dir, c, simulate(c));
}

std::vector<std::string> cmd_mitigate(const RunConfig& c) {
  const auto dir = prepare(c);
  const auto s = simulate(c);
  auto files = write_simulation(dir, c, s);
  const auto enc = c.encoding_for();
  const auto ex = exact_run(c.params, enc, c.flavors(), c.dt, c.steps);
  const auto tr = trotter_run(c.params, c.plan(), enc, c.flavors());
  const auto opt = c.mitigation_options();
  const auto t = mitigate::mitigate_run(s.spec, s.run, s.cal, ex.table, tr.table, opt);

  {
    CsvWriter w(dir / "mitigated.csv", c);
    w.header({"step", "time", "state_label", "p_exact", "p_trotter", "p_bare", "p_bare_err", "p_mit", "p_mit_err"});
    for (const auto& r : t.rows) {
      w.cell(r.step).cell(r.time).cell(r.label).cell(r.p_exact).cell(r.p_trotter);
      w.cell(r.p_bare).cell(r.p_bare_err).cell(r.p_mit).cell(r.p_mit_err);
      w.end_row();
    }
    files.push_back(w.path());
  }
  json steps = json::array();
  double mean_bare = 0.0, mean_mit = 0.0;
  for (const auto& st : t.steps) {
    steps.push_back({{"step", st.step},
                     {"time", st.time},
                     {"pi_c", st.pi_c},
                     {"pi_c_err", st.pi_c_err},
                     {"pl", st.pl},
                     {"pl_err", st.pl_err},
                     {"pl_clipped", st.pl_clipped},
                     {"leak", st.leak},
                     {"tvd_bare", st.tvd_bare.raw},
                     {"tvd_bare_clipped", st.tvd_bare.clipped},
                     {"tvd_mit", st.tvd_mit.raw},
                     {"tvd_mit_clipped", st.tvd_mit.clipped},
                     {"band_bare", {st.band_bare_lo, st.band_bare_hi}},
                     {"band_mit", {st.band_mit_lo, st.band_mit_hi}}});
    mean_bare += st.tvd_bare.raw;
    mean_mit += st.tvd_mit.raw;
  }
  if (!t.steps.empty()) {
    mean_bare /= static_cast<double>(t.steps.size());
    mean_mit /= static_cast<double>(t.steps.size());
  }
  files.push_back(write_json(dir / "tvd.json", c,
                             {{"reference", "trotter"},
                              {"band", opt.band},
                              {"bootstrap", opt.bootstrap},
                              {"steps", steps},
                              {"mean_tvd_bare", mean_bare},
                              {"mean_tvd_mit", mean_mit}}));
  files.push_back(write_json(dir / "calibration_fit.json", c, fit_json(t, opt)));
  return files;
}

std::vector<std::string> cmd_bounds(const RunConfig& c) {
  const auto dir = prepare(c);
  const auto b = bound_report(c.params, c.plan());
  const double t = c.bounds_t.value_or(c.steps * c.dt);
  const int r = b.r_for(t, c.bounds_epsilon);
  json j{{"c12_tight", b.c12_tight},
         {"c12_loose", b.c12_loose},
         {"c22_sum", b.c22_sum},
         {"c22_simple", b.c22_simple},
         {"c22_ordered", b.c22_ordered},
         {"delta_omega_max", b.delta_omega_max},
         {"delta_theta_max", b.delta_theta_max},
         {"mu", b.mu},
         {"n", b.n},
         {"notes", b.notes},
         {"t", t},
         {"epsilon", c.bounds_epsilon},
         {"r_for", r},
         {"closed_form_bound_at_r", b.closed_form_bound(t, r)},
         {"total_bound_at_r", b.total_bound(t, r)}};
  if (c.steps > 0) j["total_bound_at_steps"] = b.total_bound(t, c.steps);
  return {write_json(dir / "bounds.json", c, j)};
}

std::vector<std::string> cmd_circuit(const RunConfig& c) {
  const auto dir = prepare(c);
  const auto enc = c.encoding_for();
  const auto circ = qcir::trotter_circuit(c.params, enc, c.plan(), c.connectivity, c.pmns_circuit, c.steps);
  const fs::path txt = dir / "circuit.txt";
  {
    std::ofstream os(txt, std::ios::binary);
    if (!os) throw ConfigError("run.out", "cannot write '" + txt.string() + "'");
    os << "# format_version: " << kFormatVersion << "\n# config: " << c.to_json().dump() << "\n";
    qcir::write_text(os, circ);
  }

  qcir::Circuit layer = qcir::register_circuit(enc);
  qcir::append_trotter_layer(layer, c.params, enc, c.plan(), c.connectivity);
  const double j01 = c.params.size() >= 2 ? coupling(0, 1, c.params) : 0.0;
  const auto pair = enc.kind == EncodingKind::QubitPair ? qcir::two_body_step_qubit(j01, c.dt, c.connectivity)
                                                       : qcir::two_body_step_qutrit(j01, c.dt);
  json j{{"encoding", to_string(enc.kind)},
         {"connectivity", qcir::to_string(c.connectivity)},
         {"layers", c.steps},
         {"total", qcir::gate_counts(circ)},
         {"per_layer", qcir::gate_counts(layer)},
         {"per_two_body_step", qcir::gate_counts(pair)}};
  if (enc.kind == EncodingKind::Qutrit)
    j["compiled_reference"] = {{"CZ3_per_two_body_step", 4}, {"CZ3_per_calibration_step", 3}};
  return {txt.string(), write_json(dir / "gate_counts.json", c, j)};
}

}  // namespace nuq::cli
