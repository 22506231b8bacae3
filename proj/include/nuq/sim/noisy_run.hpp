#pragma once

#include <cstdint>
#include <vector>

#include "nuq/qcir/trotter_circuit.hpp"
#include "nuq/sim/sampling.hpp"

namespace nuq::sim {

struct NoiseModel {
  double per_layer_p = 0.0;  // global depolarizing after every Trotter layer
  double spam_s = 1.0;       // survival factor applied once, at readout
  double per_gate_p = 0.0;   // optional global depolarizing after every gate

  void validate() const;
  /// 1 - s (1 - p)^L, the layer-level depolarizing strength after L layers.
  double p_l(int layers) const;
};

struct RunSpec {
  OscillationParams params;
  Encoding enc;
  TrotterPlan plan;
  qcir::Connectivity conn;
  qcir::PmnsFlavor pmns = qcir::PmnsFlavor::Cnot;
  std::vector<int> flavors;
  NoiseModel noise;
  std::int64_t shots = 5120;
  int resamples = 30;
  std::uint64_t seed = 0;
};

struct StepResult {
  int step = 0;
  double time = 0.0;
  std::vector<double> ideal;     // noiseless register distribution, logical order
  std::vector<double> expected;  // noisy register distribution, logical order
  ShotCounts counts;             // pooled over resamples
};

struct NoisyRun {
  std::vector<StepResult> steps;
  std::size_t dim = 0;
};

/// Trotter circuits for L = 0..steps under the noise model, sampled.
NoisyRun noisy_trotter_run(const RunSpec& spec);

struct CalibrationRun {
  NoisyRun run;
  std::vector<std::string> targets;  // Pi_c per depth, noiseless outcome of the SWAP network
  std::vector<double> pi_c_expected;
  std::vector<double> pi_c_measured;
  std::vector<double> pi_c_err;
};

/// Clifford skeleton of the same circuits; every depth has a single
/// deterministic noiseless outcome.
CalibrationRun calibration_run(const RunSpec& spec, std::int64_t shots);

/// Seed for sub-stream (a, b) of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

/// Register size above which the layer-level channel is applied in closed
/// form on a state vector instead of a density matrix.
inline constexpr std::size_t kDensityCap = 1024;

}  // namespace nuq::sim
