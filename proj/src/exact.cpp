#include "nuq/exact.hpp"

#include <cmath>

#include "nuq/errors.hpp"
#include "nuq/sim/kernels.hpp"

namespace nuq {

namespace {

// Site-local operator acting on the mass/flavor slots; |00> is left alone.
Matrix site_operator(const Encoding& enc, const Matrix& u3) {
  if (enc.kind == EncodingKind::Qutrit) return u3;
  Matrix u = Matrix::Identity(4, 4);
  u.block(1, 1, 3, 3) = u3;
  return u;
}

void apply_all_sites(Vector& psi, const Encoding& enc, const Matrix& u3) {
  const Matrix u = site_operator(enc, u3);
  const Dims dims = enc.register_dims();
  for (int q = 0; q < enc.n; ++q) sim::apply(sim::default_backend(), psi.data(), dims, u, enc.site_wires(q));
}

}  // namespace

std::vector<double> time_grid(double dt, int steps) {
  std::vector<double> t(steps + 1);
  for (int l = 0; l <= steps; ++l) t[l] = l * dt;
  return t;
}

Vector initial_state(const Encoding& enc, const std::vector<int>& flavors, const Mixing& m) {
  if (static_cast<int>(flavors.size()) != enc.n) throw DomainError("initial_state: one flavor per neutrino needed");
  Vector psi = Vector::Zero(enc.dim());
  psi(enc.basis_index(flavors)) = 1.0;
  apply_all_sites(psi, enc, pmns_matrix(m).adjoint());
  return psi;
}

EvolutionResult evolve_exact(const Matrix& h, const Vector& psi0, const std::vector<double>& times) {
  const double scale = std::max(1.0, max_abs(h));
  if (!is_hermitian(h, 1e-12 * scale)) throw NumericError("evolve_exact: Hamiltonian is not Hermitian");
  if (psi0.size() != h.rows()) throw DomainError("evolve_exact: state and Hamiltonian sizes differ");
  if (std::abs(psi0.norm() - 1.0) > 1e-12) throw NumericError("evolve_exact: initial state is not normalized");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) throw NumericError("evolve_exact: eigensolver failed");
  const Vector coeff = es.eigenvectors().adjoint() * psi0;
  const Eigen::VectorXd& lam = es.eigenvalues();

  EvolutionResult r;
  r.times = times;
  r.states.resize(times.size());
#pragma omp parallel for schedule(static) if (times.size() > 4 && h.rows() >= 64)
  for (long long i = 0; i < static_cast<long long>(times.size()); ++i) {
    const double t = times[i];
    Vector c = coeff;
    for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::exp(-kI * (lam(k) * t));
    r.states[i] = es.eigenvectors() * c;
  }
  return r;
}

FlavorDistribution flavor_probabilities(const Vector& psi, const Encoding& enc, const Mixing& m) {
  if (static_cast<std::size_t>(psi.size()) != enc.dim()) throw DomainError("flavor_probabilities: size mismatch");
  const double n2 = psi.squaredNorm();
  if (std::abs(n2 - 1.0) > 1e-6) throw NumericError("flavor_probabilities: norm deficit " + std::to_string(1.0 - n2));
  Vector f = psi;
  apply_all_sites(f, enc, pmns_matrix(m));
  FlavorDistribution out;
  const auto phys = enc.physical_indices();
  out.probs.resize(phys.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < phys.size(); ++i) {
    out.probs[i] = std::norm(f(phys[i]));
    sum += out.probs[i];
  }
  out.leakage = enc.kind == EncodingKind::Qutrit ? 0.0 : std::max(0.0, f.squaredNorm() - sum);
  return out;
}

void attach_flavor_table(EvolutionResult& result, const Encoding& enc, const Mixing& m) {
  const std::size_t nl = enc.physical_indices().size();
  result.table.times = result.times;
  result.table.probs = RealMatrix::Zero(result.states.size(), nl);
  result.table.leakage.assign(result.states.size(), 0.0);
  for (std::size_t i = 0; i < result.states.size(); ++i) {
    const auto d = flavor_probabilities(result.states[i], enc, m);
    for (std::size_t k = 0; k < nl; ++k) result.table.probs(i, k) = d.probs[k];
    result.table.leakage[i] = d.leakage;
  }
}

EvolutionResult exact_run(const OscillationParams& p, const Encoding& enc, const std::vector<int>& flavors,
                          double dt, int steps) {
  const Matrix h = hamiltonian_dense(p, enc, HamiltonianPart::Full);
  auto r = evolve_exact(h, initial_state(enc, flavors, p.mixing), time_grid(dt, steps));
  attach_flavor_table(r, enc, p.mixing);
  return r;
}

}  // namespace nuq
