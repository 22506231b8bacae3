#include <doctest.h>

#include "../oracles.hpp"
#include "nuq/errors.hpp"
#include "nuq/trotter.hpp"

using namespace nuq;

namespace {

OscillationParams reference_params() {
  OscillationParams p;
  p.omegas = {2.0, 2.5};
  p.b3 = 0.025483;
  p.b8 = 0.999567;
  p.mixing = Mixing::from_degrees(33.44, 8.57, 49.2, 0.0);
  p.pair_cos = OscillationParams::default_pair_cos(2);
  return p;
}

// First-order product built from hand-assembled pieces.
Matrix step_oracle(const OscillationParams& p, double dt) {
  const int n = static_cast<int>(p.size());
  const std::vector<int> dims(n, 3);
  Matrix h1 = Matrix::Zero(oracle::qutrit_hamiltonian(p).rows(), oracle::qutrit_hamiltonian(p).rows());
  for (int q = 0; q < n; ++q)
    h1 += p.omegas[q] * oracle::embed(p.b3 * oracle::gell_mann(3) + p.b8 * oracle::gell_mann(8), {q}, dims);
  Matrix u = oracle::evolve(h1, dt);
  for (int q = 0; q < n; ++q)
    for (int k = q + 1; k < n; ++k) {
      Matrix ll = Matrix::Zero(9, 9);
      for (int a = 1; a <= 8; ++a) ll += oracle::kron(oracle::gell_mann(a), oracle::gell_mann(a));
      const double j = p.mu * (1 - p.pair_cos(q, k)) / (2.0 * n);
      u = oracle::evolve(j * oracle::embed(ll, {q, k}, dims), dt) * u;
    }
  return u;
}

}  // namespace

TEST_SUITE("trotter") {
  TEST_CASE("plan validation") {
    auto plan = TrotterPlan::lexicographic(3, 0.5, 4);
    CHECK(plan.pair_order == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK_NOTHROW(plan.validate(3));
    plan.pair_order.pop_back();
    CHECK_THROWS_AS(plan.validate(3), DomainError);
    plan.pair_order.push_back({0, 1});
    CHECK_THROWS_AS(plan.validate(3), DomainError);
    auto bad = TrotterPlan::lexicographic(2, 0.0, 1);
    CHECK_THROWS_AS(bad.validate(2), DomainError);
  }

  TEST_CASE("step unitary matches the ordered product of exact factors") {
    std::mt19937_64 rng(21);
    for (int n : {2, 3}) {
      const auto p = oracle::random_params(n, rng);
      const auto plan = TrotterPlan::lexicographic(n, 0.31, 1);
      const Matrix u = trotter_step_unitary(p, Encoding(EncodingKind::Qutrit, n), plan);
      CHECK((u - step_oracle(p, 0.31)).cwiseAbs().maxCoeff() < 1e-11);
    }
  }

  TEST_CASE("commuting pieces give an exact product") {
    OscillationParams p = reference_params();
    p.omegas = {2.0, 2.0};  // one-body part proportional to a Casimir-commuting term
    const Encoding enc(EncodingKind::Qutrit, 2);
    const auto plan = TrotterPlan::lexicographic(2, 0.5, 10);
    const auto tr = trotter_run(p, plan, enc, {0, 1});
    const auto ex = exact_run(p, enc, {0, 1}, 0.5, 10);
    CHECK((tr.table.probs - ex.table.probs).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(c12_dense(p, enc) < 1e-12);
  }

  TEST_CASE("per-step error is second order") {
    const auto p = reference_params();
    const Encoding enc(EncodingKind::Qutrit, 2);
    const Matrix h = hamiltonian_dense(p, enc, HamiltonianPart::Full);
    auto err = [&](double dt) {
      return oracle::op_norm(trotter_step_unitary(p, enc, TrotterPlan::lexicographic(2, dt, 1)) - oracle::evolve(h, dt));
    };
    const double slope = std::log(err(0.02) / err(0.01)) / std::log(2.0);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.02));
  }

  TEST_CASE("bound constants") {
    const auto b = bound_report(reference_params());
    // J = 1/4, |dw| = 0.5
    CHECK(b.c12_tight == doctest::Approx((4 * 0.025483 + 2 * oracle::kSqrt3 * 0.999567) * 0.25 * 0.5));
    CHECK(b.c12_loose == doctest::Approx(2.0));
    CHECK(b.c22_sum == 0.0);
    CHECK(b.c22_ordered == 0.0);
    CHECK(b.delta_omega_max == doctest::Approx(0.5));
    CHECK(b.delta_theta_max == 0.0);
    CHECK(b.r_for(5.0, 0.1) == 250);
    CHECK(steps_for_error(5.0, 0.1, 1.0, 2, 0.5, 0.0) == 250);
    CHECK(steps_for_error(1e-3, 1.0, 1.0, 2, 0.5, 0.0) == 1);
    CHECK(b.closed_form_bound(5.0, 250) == doctest::Approx(0.1));
    CHECK_THROWS_AS(b.total_bound(1.0, 0), DomainError);
    CHECK_THROWS_AS(steps_for_error(-1.0, 0.1, 1.0, 2, 0.5, 0.0), DomainError);
  }

  TEST_CASE("equal angles remove the two-body constant") {
    OscillationParams p;
    p.omegas = {1.0, 1.5, 2.0};
    p.b8 = 1.0;
    p.b3 = 0.0;
    p.pair_cos = RealMatrix::Constant(3, 3, 0.2);
    p.pair_cos.diagonal().setOnes();
    const auto b = bound_report(p);
    CHECK(b.c22_sum == doctest::Approx(0.0));
    CHECK(b.c22_simple == doctest::Approx(0.0));
    CHECK(b.delta_theta_max == doctest::Approx(0.0));
  }

  TEST_CASE("dense commutator norms sit under the analytic constants") {
    std::mt19937_64 rng(31);
    for (int draw = 0; draw < 10; ++draw) {
      const int n = 2 + draw % 2;
      const auto p = oracle::random_params(n, rng);
      const Encoding enc(EncodingKind::Qutrit, n);
      const auto plan = TrotterPlan::lexicographic(n, 0.1, 1);
      const auto b = bound_report(p, plan);
      CHECK(c12_dense(p, enc) <= b.c12_tight * (1 + 1e-12));
      CHECK(b.c12_tight <= b.c12_loose * (1 + 1e-12));
      CHECK(c22_dense(p, enc, plan) <= b.c22_ordered * (1 + 1e-12) + 1e-12);
    }
  }

  TEST_CASE("measured error is under the bound") {
    std::mt19937_64 rng(41);
    for (int draw = 0; draw < 6; ++draw) {
      const int n = 2 + draw % 2;
      const auto p = oracle::random_params(n, rng);
      const Encoding enc(EncodingKind::Qutrit, n);
      const double t = 1.5;
      const int r = 6;
      const auto plan = TrotterPlan::lexicographic(n, t / r, r);
      Matrix u = Matrix::Identity(enc.dim(), enc.dim());
      const Matrix step = trotter_step_unitary(p, enc, plan);
      for (int i = 0; i < r; ++i) u = step * u;
      const double e = oracle::op_norm(u - oracle::evolve(hamiltonian_dense(p, enc, HamiltonianPart::Full), t));
      const auto b = bound_report(p, plan);
      CHECK(e <= b.total_bound(t, r));
      CHECK(e <= b.closed_form_bound(t, r));
    }
  }
}
