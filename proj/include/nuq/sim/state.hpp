#pragma once

#include <vector>

#include "nuq/qcir/circuit.hpp"
#include "nuq/sim/kernels.hpp"

namespace nuq::sim {

struct StateVector {
  Dims dims;
  Vector amp;

  StateVector() = default;
  StateVector(Dims d, Vector a);
  static StateVector basis(Dims d, std::size_t index);
  double norm() const { return amp.norm(); }
};

struct DensityMatrix {
  Dims dims;
  Matrix rho;

  DensityMatrix() = default;
  DensityMatrix(Dims d, Matrix r);
  static DensityMatrix from_vector(const StateVector& s);
  double trace() const { return rho.trace().real(); }
};

/// Gates applied in order. `per_gate_p` adds a global depolarizing channel
/// after every gate (density mode only).
void run(const qcir::Circuit& c, StateVector& s, Backend b = default_backend());
void run(const qcir::Circuit& c, DensityMatrix& s, Backend b = default_backend(), double per_gate_p = 0.0);

/// (1 - p) rho + p 1/D. The vector overload exists to report the mode error.
void apply_depolarizing(DensityMatrix& s, double p);
[[noreturn]] void apply_depolarizing(StateVector& s, double p);

std::vector<double> probabilities(const StateVector& s);
std::vector<double> probabilities(const DensityMatrix& s);

/// Move every logical wire back to its own position given a final layout.
void to_logical_order(StateVector& s, std::span<const int> layout);
void to_logical_order(DensityMatrix& s, std::span<const int> layout);

}  // namespace nuq::sim
