#pragma once

#include <vector>

#include "nuq/model.hpp"

namespace nuq {

/// Per-time flavor distributions over the 3^N labels, plus the weight on
/// unphysical register states (always 0 for qutrits).
struct ProbabilityTable {
  std::vector<double> times;
  RealMatrix probs;  // rows: times, cols: flavor labels
  std::vector<double> leakage;
};

struct EvolutionResult {
  std::vector<double> times;
  std::vector<Vector> states;
  ProbabilityTable table;
};

struct FlavorDistribution {
  std::vector<double> probs;
  double leakage = 0.0;
};

/// Product state with the given flavors, written in the mass basis of the
/// encoding's register.
Vector initial_state(const Encoding& enc, const std::vector<int>& flavors, const Mixing& m);

/// psi(t) = V exp(-i L t) V^dag psi0 from one eigendecomposition of H.
EvolutionResult evolve_exact(const Matrix& h, const Vector& psi0, const std::vector<double>& times);

/// Map mass -> flavor with U_PMNS on every site and read |amplitude|^2.
/// Throws NumericError if the norm is off by more than 1e-6.
FlavorDistribution flavor_probabilities(const Vector& psi, const Encoding& enc, const Mixing& m);

/// Fills result.table from result.states.
void attach_flavor_table(EvolutionResult& result, const Encoding& enc, const Mixing& m);

/// Convenience: exact run of the full model from a flavor product state on
/// the grid {0, dt, ..., steps dt}.
EvolutionResult exact_run(const OscillationParams& p, const Encoding& enc, const std::vector<int>& flavors,
                          double dt, int steps);

std::vector<double> time_grid(double dt, int steps);

}  // namespace nuq
