#include "nuq/sim/state.hpp"

#include <cmath>

#include "nuq/errors.hpp"

namespace nuq::sim {

namespace {

void check_dims(const qcir::Circuit& c, const Dims& d) {
  if (c.dims() != d) throw DomainError("run: circuit and state registers differ");
}

// Index map for a wire permutation: out[i] is where amplitude i goes.
std::vector<std::size_t> permutation_map(std::span<const int> layout, const Dims& dims) {
  // layout[l] = physical wire of logical l; we move physical -> logical.
  const std::size_t d = total_dim(dims);
  std::vector<std::size_t> out(d);
  std::vector<int> logical(dims.size());
  for (std::size_t i = 0; i < d; ++i) {
    auto phys = digits_of(i, dims);
    for (std::size_t l = 0; l < dims.size(); ++l) logical[l] = phys[layout[l]];
    out[i] = index_of(logical, dims);
  }
  return out;
}

bool is_identity(std::span<const int> layout) {
  for (std::size_t i = 0; i < layout.size(); ++i)
    if (layout[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

StateVector::StateVector(Dims d, Vector a) : dims(std::move(d)), amp(std::move(a)) {
  if (static_cast<std::size_t>(amp.size()) != total_dim(dims)) throw DomainError("StateVector: size mismatch");
}

StateVector StateVector::basis(Dims d, std::size_t index) {
  Vector a = Vector::Zero(total_dim(d));
  if (index >= static_cast<std::size_t>(a.size())) throw DomainError("StateVector::basis: index out of range");
  a(index) = 1.0;
  return StateVector(std::move(d), std::move(a));
}

DensityMatrix::DensityMatrix(Dims d, Matrix r) : dims(std::move(d)), rho(std::move(r)) {
  const std::size_t n = total_dim(dims);
  if (static_cast<std::size_t>(rho.rows()) != n || rho.cols() != rho.rows())
    throw DomainError("DensityMatrix: size mismatch");
}

DensityMatrix DensityMatrix::from_vector(const StateVector& s) {
  return DensityMatrix(s.dims, s.amp * s.amp.adjoint());
}

void run(const qcir::Circuit& c, StateVector& s, Backend b) {
  check_dims(c, s.dims);
  for (const auto& g : c.gates()) apply(b, s.amp.data(), s.dims, qcir::gate_matrix(g), g.wires);
}

void run(const qcir::Circuit& c, DensityMatrix& s, Backend b, double per_gate_p) {
  check_dims(c, s.dims);
  for (const auto& g : c.gates()) {
    apply_density(b, s.rho, s.dims, qcir::gate_matrix(g), g.wires);
    if (per_gate_p > 0.0) apply_depolarizing(s, per_gate_p);
  }
}

void apply_depolarizing(DensityMatrix& s, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("apply_depolarizing: p outside [0, 1]");
  const double d = static_cast<double>(s.rho.rows());
  const double tr = s.trace();
  s.rho *= (1.0 - p);
  s.rho.diagonal().array() += p * tr / d;
}

void apply_depolarizing(StateVector&, double) {
  throw NumericError("apply_depolarizing needs a density matrix; the state is a vector");
}

std::vector<double> probabilities(const StateVector& s) {
  std::vector<double> p(s.amp.size());
  for (Eigen::Index i = 0; i < s.amp.size(); ++i) p[i] = std::norm(s.amp(i));
  return p;
}

std::vector<double> probabilities(const DensityMatrix& s) {
  std::vector<double> p(s.rho.rows());
  for (Eigen::Index i = 0; i < s.rho.rows(); ++i) p[i] = std::max(0.0, s.rho(i, i).real());
  return p;
}

void to_logical_order(StateVector& s, std::span<const int> layout) {
  if (is_identity(layout)) return;
  const auto map = permutation_map(layout, s.dims);
  Vector out(s.amp.size());
  for (std::size_t i = 0; i < map.size(); ++i) out(map[i]) = s.amp(i);
  s.amp = std::move(out);
}

void to_logical_order(DensityMatrix& s, std::span<const int> layout) {
  if (is_identity(layout)) return;
  const auto map = permutation_map(layout, s.dims);
  Matrix out(s.rho.rows(), s.rho.cols());
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = 0; j < map.size(); ++j) out(map[i], map[j]) = s.rho(i, j);
  s.rho = std::move(out);
}

}  // namespace nuq::sim
