#include <doctest.h>

#include "../oracles.hpp"
#include "nuq/errors.hpp"
#include "nuq/exact.hpp"

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

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("eigendecomposition route agrees with the Taylor exponential") {
    std::mt19937_64 rng(3);
    const Matrix h = oracle::random_hermitian(9, rng);
    Vector psi = Vector::Zero(9);
    psi(2) = 1;
    const std::vector<double> times{0.0, 0.3, 1.7, 4.0};
    const auto r = evolve_exact(h, psi, times);
    REQUIRE(r.states.size() == times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
      const Vector ref = oracle::evolve(h, times[i]) * psi;
      CHECK((r.states[i] - ref).cwiseAbs().maxCoeff() < 1e-11);
      CHECK(r.states[i].norm() == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK((expm_hermitian(h, 0.9) - oracle::evolve(h, 0.9)).cwiseAbs().maxCoeff() < 1e-11);
  }

  TEST_CASE("input checks") {
    Matrix h = Matrix::Identity(3, 3);
    h(0, 1) = 1.0;
    Vector psi = Vector::Zero(3);
    psi(0) = 1;
    CHECK_THROWS_AS(evolve_exact(h, psi, {1.0}), NumericError);
    CHECK_THROWS_AS(evolve_exact(Matrix::Identity(3, 3), Vector::Zero(3), {1.0}), NumericError);
    CHECK_THROWS_AS(evolve_exact(Matrix::Identity(3, 3), Vector::Ones(4) / 2.0, {1.0}), DomainError);
    const Encoding enc(EncodingKind::Qutrit, 1);
    CHECK_THROWS_AS(flavor_probabilities(Vector::Zero(3), enc, Mixing{}), NumericError);
  }

  TEST_CASE("single neutrino follows the vacuum oscillation formula") {
    OscillationParams p;
    p.omegas = {1.3};
    p.b3 = 0.6;
    p.b8 = 0.8;
    p.mixing = {0.59, 0.15, 0.84, 1.1};
    p.pair_cos = RealMatrix::Identity(1, 1);
    const Matrix u = oracle::pmns(p.mixing);
    const Matrix h1 = p.omegas[0] * (p.b3 * oracle::gell_mann(3) + p.b8 * oracle::gell_mann(8));
    for (auto kind : {EncodingKind::Qutrit, EncodingKind::QubitPair}) {
      const auto r = exact_run(p, Encoding(kind, 1), {0}, 0.4, 6);
      for (std::size_t s = 0; s < r.table.times.size(); ++s) {
        const double t = r.table.times[s];
        // amplitude <b| U e^{-iHt} U^dag |e>
        const Vector a = u * oracle::evolve(h1, t) * u.adjoint().col(0);
        for (int b = 0; b < 3; ++b) CHECK(r.table.probs(s, b) == doctest::Approx(std::norm(a(b))).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("reference configuration: 11 rows, rows sum to one, starts in e,mu") {
    const auto r = exact_run(reference_params(), Encoding(EncodingKind::QubitPair, 2), {0, 1}, 0.5, 10);
    REQUIRE(r.table.probs.rows() == 11);
    REQUIRE(r.table.probs.cols() == 9);
    for (Eigen::Index s = 0; s < 11; ++s) {
      CHECK(r.table.probs.row(s).sum() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(r.table.leakage[s] < 1e-20);
    }
    CHECK(r.table.probs(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.table.times.back() == doctest::Approx(5.0));
    const auto zero = exact_run(reference_params(), Encoding(EncodingKind::Qutrit, 2), {0, 1}, 0.5, 0);
    CHECK(zero.table.probs.rows() == 1);
  }

  TEST_CASE("qubit and qutrit encodings give the same flavor dynamics") {
    std::mt19937_64 rng(5);
    for (int n : {2, 3}) {
      const auto p = oracle::random_params(n, rng);
      std::vector<int> fl(n);
      for (int i = 0; i < n; ++i) fl[i] = i % 3;
      const auto a = exact_run(p, Encoding(EncodingKind::Qutrit, n), fl, 0.7, 8);
      const auto b = exact_run(p, Encoding(EncodingKind::QubitPair, n), fl, 0.7, 8);
      CHECK((a.table.probs - b.table.probs).cwiseAbs().maxCoeff() < 1e-10);
      // weight on unphysical qubit states
      const auto phys = oracle::qubit_physical(n);
      for (const auto& psi : b.states) {
        double w = psi.squaredNorm();
        for (auto i : phys) w -= std::norm(psi(i));
        CHECK(std::abs(w) < 1e-10);
      }
    }
  }

  TEST_CASE("initial state is U^dag per site") {
    const Mixing m{0.5, 0.2, 0.7, 0.3};
    const Vector psi = initial_state(Encoding(EncodingKind::Qutrit, 2), {2, 0}, m);
    const Matrix ud = oracle::pmns(m).adjoint();
    const Vector ref = oracle::kron(ud.col(2), ud.col(0));
    CHECK((psi - ref).cwiseAbs().maxCoeff() < 1e-14);
  }
}
