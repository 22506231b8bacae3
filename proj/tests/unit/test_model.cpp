#include <doctest.h>

#include "../oracles.hpp"
#include "nuq/errors.hpp"
#include "nuq/su3.hpp"

using namespace nuq;

namespace {

OscillationParams reference_params() {
  OscillationParams p;
  p.mu = 1.0;
  p.omegas = {2.0, 2.5};
  p.b3 = 0.025483;
  p.b8 = 0.999567;
  p.mixing = Mixing::from_degrees(33.44, 8.57, 49.2, 0.0);
  p.pair_cos = OscillationParams::default_pair_cos(2);
  return p;
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("PMNS matrix matches the standard parameterization and is unitary") {
    for (double d : {0.0, 0.7, -2.1}) {
      const Mixing m{0.58, 0.15, 0.86, d};
      const Matrix u = pmns_matrix(m);
      CHECK((u - oracle::pmns(m)).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((u.adjoint() * u - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-14);
    }
    const auto m = Mixing::from_degrees(90, 0, 0, 180);
    CHECK(m.theta12 == doctest::Approx(oracle::kPi / 2));
    CHECK(m.delta_cp == doctest::Approx(oracle::kPi));
  }

  TEST_CASE("parameter validation") {
    auto p = reference_params();
    CHECK_NOTHROW(p.validate());
    CHECK_THROWS_AS(p.validate(1e-12), DomainError);  // the quoted B is 2e-4 off unit norm
    auto q = p;
    q.mu = -1;
    CHECK_THROWS_AS(q.validate(), DomainError);
    q = p;
    q.omegas[1] = 0;
    CHECK_THROWS_AS(q.validate(), DomainError);
    q = p;
    q.b3 = 0.5;
    CHECK_THROWS_AS(q.validate(), DomainError);
    q = p;
    q.pair_cos(0, 1) = 0.3;
    CHECK_THROWS_AS(q.validate(), DomainError);
    q = p;
    q.pair_cos = RealMatrix::Identity(3, 3);
    CHECK_THROWS_AS(q.validate(), DomainError);
  }

  TEST_CASE("couplings") {
    auto p = reference_params();
    CHECK(coupling(0, 1, p) == doctest::Approx(0.25));
    p.pair_cos(0, 1) = p.pair_cos(1, 0) = 0.5;
    CHECK(coupling(1, 0, p) == doctest::Approx(0.125));
    CHECK_THROWS_AS(coupling(0, 0, p), DomainError);
    CHECK_THROWS_AS(coupling(0, 2, p), DomainError);
  }

  TEST_CASE("parameters from mass splittings") {
    const Mixing m = Mixing::from_degrees(33.44, 8.57, 49.2, 0);
    const auto p = params_from_masses(7.4e-5, 2.5e-3, 2.5e-3 - 7.4e-5, {1.0, 2.0}, 1.0, m);
    CHECK(p.size() == 2);
    CHECK(std::hypot(p.b3, p.b8) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.omegas[0] == doctest::Approx(2 * p.omegas[1]));
    CHECK_NOTHROW(p.validate(1e-12));
    CHECK_THROWS_AS(params_from_masses(7.4e-5, 2.5e-3, 2.5e-3, {1.0}, 1.0, m), DomainError);
    CHECK_THROWS_AS(params_from_masses(7.4e-5, 2.5e-3, 2.5e-3 - 7.4e-5, {}, 1.0, m), DomainError);
  }

  TEST_CASE("encodings: dimensions, slots, physical indices") {
    const Encoding q2(EncodingKind::QubitPair, 2), t2(EncodingKind::Qutrit, 2);
    CHECK(q2.dim() == 16);
    CHECK(t2.dim() == 9);
    CHECK(q2.site_wires(1) == std::vector<int>{2, 3});
    CHECK(t2.site_wires(1) == std::vector<int>{1});
    CHECK(q2.physical_indices() == oracle::qubit_physical(2));
    CHECK(q2.basis_index({0, 1}) == 6);  // |01>|10>
    std::vector<int> s;
    CHECK(q2.slots_of(6, s));
    CHECK(s == std::vector<int>{0, 1});
    CHECK_FALSE(q2.slots_of(1, s));  // |00>|01>
    CHECK(t2.basis_index({2, 1}) == 7);
    CHECK(encoding_from_string("qubitpair") == EncodingKind::QubitPair);
    CHECK(encoding_from_string("qutrit") == EncodingKind::Qutrit);
    CHECK_THROWS_AS(encoding_from_string("ququart"), DomainError);
    CHECK_THROWS_AS(check_dense_cap(Encoding(EncodingKind::QubitPair, 7)), CapError);
    CHECK_THROWS_AS(check_dense_cap(Encoding(EncodingKind::Qutrit, 9)), CapError);
    CHECK_NOTHROW(check_dense_cap(Encoding(EncodingKind::Qutrit, 8)));
  }

  TEST_CASE("flavor strings") {
    CHECK(parse_flavor_string("e,mu") == std::vector<int>{0, 1});
    CHECK(parse_flavor_string("tau, e ,mu") == std::vector<int>{2, 0, 1});
    CHECK_THROWS_WITH_AS(parse_flavor_string("e,x"), doctest::Contains("'x'"), DomainError);
    CHECK_THROWS_AS(parse_flavor_string(""), DomainError);
    CHECK(flavor_label({1, 2}) == "mu,tau");
    CHECK(flavor_label(5, 2) == "mu,tau");
    for (std::size_t k = 0; k < 27; ++k) {
      const auto slots = parse_flavor_string(flavor_label(k, 3));
      CHECK(Encoding(EncodingKind::Qutrit, 3).basis_index(slots) == k);
    }
  }

  TEST_CASE("Hamiltonian matches the hand-assembled sum") {
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 3}) {
      const auto p = oracle::random_params(n, rng);
      const Matrix h = hamiltonian_dense(p, Encoding(EncodingKind::Qutrit, n), HamiltonianPart::Full);
      CHECK((h - oracle::qutrit_hamiltonian(p)).cwiseAbs().maxCoeff() < 1e-13);
      CHECK(is_hermitian(h, 1e-13));
      const Matrix one = hamiltonian_dense(p, Encoding(EncodingKind::Qutrit, n), HamiltonianPart::OneBody);
      const Matrix two = hamiltonian_dense(p, Encoding(EncodingKind::Qutrit, n), HamiltonianPart::TwoBody);
      CHECK((one + two - h).cwiseAbs().maxCoeff() < 1e-13);
      Matrix pairs = Matrix::Zero(h.rows(), h.cols());
      for (int q = 0; q < n; ++q)
        for (int k = q + 1; k < n; ++k) pairs += pair_term_dense(p, Encoding(EncodingKind::Qutrit, n), q, k);
      CHECK((pairs - two).cwiseAbs().maxCoeff() < 1e-13);
    }
  }

  TEST_CASE("qubit-pair Hamiltonian equals the qutrit one on the physical subspace") {
    std::mt19937_64 rng(12);
    for (int n : {1, 2, 3}) {
      const auto p = oracle::random_params(n, rng);
      const Matrix ht = hamiltonian_dense(p, Encoding(EncodingKind::Qutrit, n), HamiltonianPart::Full);
      const Matrix hq = hamiltonian_dense(p, Encoding(EncodingKind::QubitPair, n), HamiltonianPart::Full);
      const auto phys = oracle::qubit_physical(n);
      CHECK((oracle::restrict_to(hq, phys) - ht).cwiseAbs().maxCoeff() < 1e-12);
      std::vector<bool> is_phys(hq.rows(), false);
      for (auto i : phys) is_phys[i] = true;
      double unphys = 0;
      for (Eigen::Index r = 0; r < hq.rows(); ++r)
        if (!is_phys[r]) unphys = std::max(unphys, hq.row(r).cwiseAbs().maxCoeff() + hq.col(r).cwiseAbs().maxCoeff());
      CHECK(unphys == 0.0);
    }
  }

  TEST_CASE("mismatched N is rejected") {
    auto p = reference_params();
    CHECK_THROWS_AS(hamiltonian_dense(p, Encoding(EncodingKind::Qutrit, 3), HamiltonianPart::Full), DomainError);
  }
}
