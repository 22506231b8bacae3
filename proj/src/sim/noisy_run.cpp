#include "nuq/sim/noisy_run.hpp"

#include <cmath>

#include "nuq/errors.hpp"

namespace nuq::sim {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using LayerFn = void (*)(qcir::Circuit&, const RunSpec&);

void trotter_layer(qcir::Circuit& c, const RunSpec& s) {
  qcir::append_trotter_layer(c, s.params, s.enc, s.plan, s.conn);
}

void clifford_layer(qcir::Circuit& c, const RunSpec& s) { qcir::append_clifford_layer(c, s.enc, s.plan, s.conn); }

qcir::Circuit continuing(const RunSpec& s, const std::vector<int>& layout) {
  qcir::Circuit c = qcir::register_circuit(s.enc);
  c.set_layout(layout);
  return c;
}

// Distribution at readout given the state after some layers.
template <class State>
std::vector<double> readout(State st, const RunSpec& s, const std::vector<int>& layout, double spam_p) {
  qcir::Circuit m = continuing(s, layout);
  qcir::append_measurement_basis(m, s.enc, s.params.mixing, s.pmns);
  run(m, st);
  if constexpr (std::is_same_v<State, DensityMatrix>) {
    if (spam_p > 0.0) apply_depolarizing(st, spam_p);
  }
  to_logical_order(st, m.layout());
  return probabilities(st);
}

std::vector<double> mix_uniform(std::vector<double> p, double strength) {
  const double u = strength / static_cast<double>(p.size());
  for (double& x : p) x = (1.0 - strength) * x + u;
  return p;
}

NoisyRun execute(const RunSpec& s, LayerFn layer, std::int64_t shots, std::uint64_t stream) {
  s.noise.validate();
  s.plan.validate(s.enc.n);
  if (static_cast<int>(s.flavors.size()) != s.enc.n) throw DomainError("run: one initial flavor per neutrino needed");
  if (shots <= 0 || s.resamples <= 0) throw DomainError("run: shots and resamples must be > 0");
  check_dense_cap(s.enc);

  const Dims dims = s.enc.register_dims();
  const std::size_t d = s.enc.dim();
  const bool density = d <= kDensityCap;
  if (!density && s.noise.per_gate_p > 0.0) throw CapError("per-gate noise needs a density matrix; register too large");

  qcir::Circuit prep = qcir::register_circuit(s.enc);
  qcir::append_preparation(prep, s.enc, s.params.mixing, s.pmns);
  StateVector ideal = StateVector::basis(dims, s.enc.basis_index(s.flavors));
  run(prep, ideal);
  DensityMatrix rho;
  if (density) {
    rho = DensityMatrix::from_vector(StateVector::basis(dims, s.enc.basis_index(s.flavors)));
    run(prep, rho, default_backend(), s.noise.per_gate_p);
  }
  const double spam_p = 1.0 - s.noise.spam_s;

  NoisyRun out;
  out.dim = d;
  std::vector<int> layout = prep.layout();
  for (int l = 0; l <= s.plan.steps; ++l) {
    if (l > 0) {
      qcir::Circuit c = continuing(s, layout);
      layer(c, s);
      run(c, ideal);
      if (density) {
        run(c, rho, default_backend(), s.noise.per_gate_p);
        apply_depolarizing(rho, s.noise.per_layer_p);
      }
      layout = c.layout();
    }
    StepResult r;
    r.step = l;
    r.time = l * s.plan.dt;
    r.ideal = readout(ideal, s, layout, 0.0);
    r.expected = density ? readout(rho, s, layout, spam_p) : mix_uniform(r.ideal, s.noise.p_l(l));
    r.counts.seed = derive_seed(s.seed, stream, static_cast<std::uint64_t>(l));
    for (int k = 0; k < s.resamples; ++k) {
      const auto part = sample(r.expected, shots, derive_seed(r.counts.seed, 0, k), s.enc);
      for (const auto& [label, n] : part.counts) r.counts.counts[label] += n;
      r.counts.shots += part.shots;
    }
    out.steps.push_back(std::move(r));
  }
  return out;
}

}  // namespace

void NoiseModel::validate() const {
  if (!(per_layer_p >= 0.0 && per_layer_p <= 1.0)) throw DomainError("noise: per_layer_p outside [0, 1]");
  if (!(spam_s > 0.0 && spam_s <= 1.0)) throw DomainError("noise: spam_s outside (0, 1]");
  if (!(per_gate_p >= 0.0 && per_gate_p <= 1.0)) throw DomainError("noise: per_gate_p outside [0, 1]");
}

double NoiseModel::p_l(int layers) const { return 1.0 - spam_s * std::pow(1.0 - per_layer_p, layers); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix(splitmix(splitmix(seed) ^ a) ^ (b * 0x2545f4914f6cdd1dULL));
}

NoisyRun noisy_trotter_run(const RunSpec& spec) { return execute(spec, trotter_layer, spec.shots, 1); }

CalibrationRun calibration_run(const RunSpec& spec, std::int64_t shots) {
  RunSpec s = spec;
  s.resamples = 1;
  CalibrationRun c;
  c.run = execute(s, clifford_layer, shots, 2);
  for (const auto& st : c.run.steps) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < st.ideal.size(); ++i)
      if (st.ideal[i] > st.ideal[best]) best = i;
    if (st.ideal[best] < 1.0 - 1e-9)
      throw ConstructionError("calibration circuit at depth " + std::to_string(st.step) +
                              " has no deterministic outcome (max probability " + std::to_string(st.ideal[best]) + ")");
    const std::string label = outcome_label(best, s.enc);
    c.targets.push_back(label);
    c.pi_c_expected.push_back(st.expected[best]);
    c.pi_c_measured.push_back(st.counts.frequency(label));
    c.pi_c_err.push_back(st.counts.std_error(label));
  }
  return c;
}

}  // namespace nuq::sim
