#include "nuq/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nuq/errors.hpp"

namespace nuq {

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TrotterPlan TrotterPlan::lexicographic(int n, double dt, int steps) {
  TrotterPlan p;
  p.dt = dt;
  p.steps = steps;
  for (int q = 0; q < n; ++q)
    for (int k = q + 1; k < n; ++k) p.pair_order.emplace_back(q, k);
  return p;
}

void TrotterPlan::validate(int n) const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("plan: dt must be > 0");
  if (steps < 0) throw DomainError("plan: steps must be >= 0");
  std::set<std::pair<int, int>> seen;
  for (auto [q, k] : pair_order) {
    if (q < 0 || k >= n || q >= k) throw DomainError("plan: pair entries need 0 <= q < k < N");
    if (!seen.insert({q, k}).second) throw DomainError("plan: repeated pair");
  }
  if (static_cast<int>(seen.size()) != n * (n - 1) / 2) throw DomainError("plan: pair_order misses pairs");
}

double BoundReport::total_bound(double t, int r) const {
  if (r < 1) throw DomainError("total_bound: r must be >= 1");
  return t * t / (2.0 * r) * (c12_tight + c22_ordered);
}

double BoundReport::closed_form_bound(double t, int r) const {
  if (r < 1) throw DomainError("closed_form_bound: r must be >= 1");
  return t * t / (2.0 * r) * mu * n * (2.0 * delta_omega_max + kSqrt3 * mu * delta_theta_max);
}

int BoundReport::r_for(double t, double eps) const {
  return steps_for_error(t, eps, mu, n, delta_omega_max, delta_theta_max);
}

int steps_for_error(double t, double epsilon, double mu, int n, double delta_omega_max, double delta_theta_max) {
  if (!(t > 0.0) || !(epsilon > 0.0)) throw DomainError("steps_for_error: t and epsilon must be > 0");
  const double x = t * t / (2.0 * epsilon) * mu * n * (2.0 * delta_omega_max + kSqrt3 * mu * delta_theta_max);
  // guard against 250.00000000000003 style round-up
  const double r = std::ceil(x * (1.0 - 1e-12));
  if (r > 2e9) throw CapError("steps_for_error: step count overflows");
  return std::max(1, static_cast<int>(r));
}

BoundReport bound_report(const OscillationParams& p, const TrotterPlan& plan) {
  const int n = static_cast<int>(p.size());
  BoundReport b;
  b.mu = p.mu;
  b.n = n;
  for (int q = 0; q < n; ++q)
    for (int k = 0; k < n; ++k) b.delta_omega_max = std::max(b.delta_omega_max, std::abs(p.omegas[q] - p.omegas[k]));
  for (int l = 0; l < n; ++l)
    for (int q = 0; q < n; ++q)
      for (int k = 0; k < n; ++k)
        if (l != q && l != k && q != k)
          b.delta_theta_max = std::max(b.delta_theta_max, std::abs(p.pair_cos(l, q) - p.pair_cos(l, k)));

  if (n < 2) {
    b.notes.push_back("N < 2: no two-body term, all bounds vanish");
    return b;
  }
  plan.validate(n);

  const double pref = 4.0 * std::abs(p.b3) + 2.0 * kSqrt3 * std::abs(p.b8);
  double s = 0.0;
  for (int q = 0; q < n; ++q)
    for (int k = q + 1; k < n; ++k) s += coupling(q, k, p) * std::abs(p.omegas[k] - p.omegas[q]);
  b.c12_tight = pref * s;
  b.c12_loose = 2.0 * p.mu * n * b.delta_omega_max;

  for (int q = 0; q < n; ++q)
    for (int k = q + 1; k < n; ++k) {
      double inner = 0.0;
      for (int l = 0; l < n; ++l)
        if (l != q && l != k) inner += std::abs(coupling(l, q, p) - coupling(l, k, p));
      b.c22_sum += 4.0 * kSqrt3 * coupling(q, k, p) * inner;
    }
  b.c22_simple = kSqrt3 * p.mu * p.mu * n * b.delta_theta_max;

  // position of each pair in the product
  std::vector<std::vector<int>> pos(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < plan.pair_order.size(); ++i) {
    auto [q, k] = plan.pair_order[i];
    pos[q][k] = pos[k][q] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < plan.pair_order.size(); ++i) {
    auto [q, k] = plan.pair_order[i];
    const int here = static_cast<int>(i);
    double inner = 0.0;
    for (int l = 0; l < n; ++l) {
      if (l == q || l == k) continue;
      const double a = pos[l][q] > here ? coupling(l, q, p) : 0.0;
      const double c = pos[l][k] > here ? coupling(l, k, p) : 0.0;
      inner += std::abs(a - c);
    }
    b.c22_ordered += 4.0 * kSqrt3 * coupling(q, k, p) * inner;
  }
  if (n >= 3 && b.c22_ordered > b.c22_sum)
    b.notes.push_back("c22_sum assumes both neighbouring pairs follow K; the ordered form is used for total_bound");
  return b;
}

BoundReport bound_report(const OscillationParams& p) {
  const int n = static_cast<int>(p.size());
  return bound_report(p, TrotterPlan::lexicographic(n, 1.0, 1));
}

int steps_for_error(double t, double epsilon, const OscillationParams& p) {
  return bound_report(p).r_for(t, epsilon);
}

Matrix trotter_step_unitary(const OscillationParams& p, const Encoding& enc, const TrotterPlan& plan) {
  plan.validate(enc.n);
  Matrix u = expm_hermitian(hamiltonian_dense(p, enc, HamiltonianPart::OneBody), plan.dt);
  for (auto [q, k] : plan.pair_order) u = expm_hermitian(pair_term_dense(p, enc, q, k), plan.dt) * u;
  return u;
}

EvolutionResult trotter_evolve_dense(const OscillationParams& p, const TrotterPlan& plan, const Encoding& enc,
                                     const Vector& psi0) {
  const Matrix step = trotter_step_unitary(p, enc, plan);
  EvolutionResult r;
  r.times = time_grid(plan.dt, plan.steps);
  r.states.reserve(plan.steps + 1);
  Vector psi = psi0;
  r.states.push_back(psi);
  for (int l = 0; l < plan.steps; ++l) {
    psi = step * psi;
    r.states.push_back(psi);
  }
  return r;
}

EvolutionResult trotter_run(const OscillationParams& p, const TrotterPlan& plan, const Encoding& enc,
                            const std::vector<int>& flavors) {
  auto r = trotter_evolve_dense(p, plan, enc, initial_state(enc, flavors, p.mixing));
  attach_flavor_table(r, enc, p.mixing);
  return r;
}

double c12_dense(const OscillationParams& p, const Encoding& enc) {
  return spectral_norm(commutator(hamiltonian_dense(p, enc, HamiltonianPart::OneBody),
                                  hamiltonian_dense(p, enc, HamiltonianPart::TwoBody)));
}

double c22_dense(const OscillationParams& p, const Encoding& enc, const TrotterPlan& plan) {
  plan.validate(enc.n);
  std::vector<Matrix> terms;
  for (auto [q, k] : plan.pair_order) terms.push_back(pair_term_dense(p, enc, q, k));
  double total = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Matrix later = Matrix::Zero(terms[i].rows(), terms[i].cols());
    for (std::size_t j = i + 1; j < terms.size(); ++j) later += terms[j];
    total += spectral_norm(commutator(terms[i], later));
  }
  return total;
}

}  // namespace nuq
