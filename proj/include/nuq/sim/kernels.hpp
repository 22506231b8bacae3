#pragma once

#include <vector>

#include "nuq/linalg.hpp"

namespace nuq::sim {

enum class Backend { Serial, OpenMP };

/// Index bookkeeping for one local operator on a mixed-radix register.
struct LocalPlan {
  std::size_t dim = 0;          // full register
  std::size_t local_dim = 0;    // product of the gate wires' dims
  std::vector<std::size_t> offsets;       // local basis state -> index offset
  std::vector<std::size_t> other_strides; // strides of wires not touched
  std::vector<int> other_dims;

  LocalPlan(std::span<const int> dims, std::span<const int> wires);
  /// k-th index whose digits on the gate wires are all zero.
  std::size_t base(std::size_t k) const;
  std::size_t num_bases() const { return dim / local_dim; }
};

/// psi <- (u on wires) psi, in place. `psi` has total_dim(dims) entries.
/// The serial kernel scans every index and is kept as the reference.
void apply_serial(cplx* psi, std::span<const int> dims, const Matrix& u, std::span<const int> wires);
void apply_omp(cplx* psi, std::span<const int> dims, const Matrix& u, std::span<const int> wires);
void apply(Backend b, cplx* psi, std::span<const int> dims, const Matrix& u, std::span<const int> wires);

/// rho <- U rho U^dag for a column-major D x D matrix.
void apply_density(Backend b, Matrix& rho, std::span<const int> dims, const Matrix& u, std::span<const int> wires);

Backend default_backend();
void set_default_backend(Backend b);

}  // namespace nuq::sim
