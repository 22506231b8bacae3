// Independent reference implementations used only by tests.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nuq/linalg.hpp"
#include "nuq/model.hpp"

namespace oracle {

using nuq::cplx;
using nuq::Matrix;
using nuq::Vector;

inline const double kSqrt3 = std::sqrt(3.0);
inline constexpr double kPi = std::numbers::pi;

/// exp(a) by scaling and squaring of a truncated Taylor series.
inline Matrix taylor_expm(const Matrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix x = a / std::ldexp(1.0, squarings);
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// exp(-i t h)
inline Matrix evolve(const Matrix& h, double t) { return taylor_expm(cplx(0.0, -t) * h); }

inline Matrix pauli(char c) {
  Matrix m = Matrix::Zero(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
  }
  return m;
}

/// Tensor product of Paulis, leftmost character on wire 0.
inline Matrix pauli_string(const std::string& s) {
  Matrix out = Matrix::Identity(1, 1);
  for (char c : s) {
    const Matrix p = pauli(c);
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = out(i, j) * p;
    out = next;
  }
  return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Operator `local` on `wires`, identity elsewhere, built entry by entry.
inline Matrix embed(const Matrix& local, const std::vector<int>& wires, const std::vector<int>& dims) {
  std::size_t d = 1;
  for (int x : dims) d *= static_cast<std::size_t>(x);
  auto digits = [&](std::size_t idx) {
    std::vector<int> out(dims.size());
    for (int w = static_cast<int>(dims.size()) - 1; w >= 0; --w) {
      out[w] = static_cast<int>(idx % dims[w]);
      idx /= dims[w];
    }
    return out;
  };
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < d; ++r) {
    const auto dr = digits(r);
    for (std::size_t c = 0; c < d; ++c) {
      const auto dc = digits(c);
      bool same = true;
      for (std::size_t w = 0; w < dims.size() && same; ++w) {
        bool on = false;
        for (int x : wires) on = on || x == static_cast<int>(w);
        if (!on && dr[w] != dc[w]) same = false;
      }
      if (!same) continue;
      std::size_t lr = 0, lc = 0;
      for (int x : wires) {
        lr = lr * dims[x] + dr[x];
        lc = lc * dims[x] + dc[x];
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = local(lr, lc);
    }
  }
  return out;
}

/// Gell-Mann matrices written out by hand, i = 1..8.
inline Matrix gell_mann(int i) {
  const cplx I(0, 1);
  Matrix m = Matrix::Zero(3, 3);
  switch (i) {
    case 1: m(0, 1) = m(1, 0) = 1; break;
    case 2: m(0, 1) = -I; m(1, 0) = I; break;
    case 3: m(0, 0) = 1; m(1, 1) = -1; break;
    case 4: m(0, 2) = m(2, 0) = 1; break;
    case 5: m(0, 2) = -I; m(2, 0) = I; break;
    case 6: m(1, 2) = m(2, 1) = 1; break;
    case 7: m(1, 2) = -I; m(2, 1) = I; break;
    case 8: m(0, 0) = m(1, 1) = 1 / kSqrt3; m(2, 2) = -2 / kSqrt3; break;
  }
  return m;
}

/// 0 (+) lambda_i on (|00>, |01>, |10>, |11>).
inline Matrix qubit_generator(int i) {
  Matrix m = Matrix::Zero(4, 4);
  m.block(1, 1, 3, 3) = gell_mann(i);
  return m;
}

/// Standard parameterization, row = flavor, column = mass state.
inline Matrix pmns(const nuq::Mixing& x) {
  const double c12 = std::cos(x.theta12), s12 = std::sin(x.theta12);
  const double c13 = std::cos(x.theta13), s13 = std::sin(x.theta13);
  const double c23 = std::cos(x.theta23), s23 = std::sin(x.theta23);
  const cplx e = std::polar(1.0, x.delta_cp);
  Matrix u(3, 3);
  u << c12 * c13, s12 * c13, s13 * std::conj(e),
      -s12 * c23 - c12 * s23 * s13 * e, c12 * c23 - s12 * s23 * s13 * e, s23 * c13,
      s12 * s23 - c12 * c23 * s13 * e, -c12 * s23 - s12 * c23 * s13 * e, c23 * c13;
  return u;
}

inline Matrix swap(int d) {
  Matrix s = Matrix::Zero(d * d, d * d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) s(y * d + x, x * d + y) = 1;
  return s;
}

/// max |a - e^{i phi} b| with phi aligning the overlap Tr(b^dag a).
inline double phase_distance(const Matrix& a, const Matrix& b) {
  const cplx ov = (b.adjoint() * a).trace();
  const cplx ph = std::abs(ov) > 0 ? ov / std::abs(ov) : cplx(1.0);
  return (a - ph * b).cwiseAbs().maxCoeff();
}

inline Matrix restrict_to(const Matrix& a, const std::vector<std::size_t>& idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = a(idx[i], idx[j]);
  return out;
}

/// Physical qubit-pair register indices in flavor-string order.
inline std::vector<std::size_t> qubit_physical(int n) {
  std::vector<std::size_t> out;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rem = k, idx = 0, mult = 1;
    for (int s = n - 1; s >= 0; --s) {
      idx += (rem % 3 + 1) * mult;
      rem /= 3;
      mult *= 4;
    }
    out.push_back(idx);
  }
  return out;
}

inline Matrix random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = cplx(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

inline Matrix random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ();
}

inline double op_norm(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

/// Random model with unit B, couplings from random angles.
inline nuq::OscillationParams random_params(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  nuq::OscillationParams p;
  p.mu = 0.5 + u(rng);
  for (int i = 0; i < n; ++i) p.omegas.push_back(0.5 + 2.5 * u(rng));
  const double phi = 2 * kPi * u(rng);
  p.b3 = std::cos(phi);
  p.b8 = std::sin(phi);
  p.mixing = {u(rng), u(rng), u(rng), 2 * kPi * u(rng)};
  p.pair_cos = nuq::RealMatrix::Identity(n, n);
  for (int q = 0; q < n; ++q)
    for (int k = q + 1; k < n; ++k) p.pair_cos(q, k) = p.pair_cos(k, q) = 2 * u(rng) - 1;
  return p;
}

/// Hamiltonian in the qutrit encoding assembled from hand-written matrices.
inline Matrix qutrit_hamiltonian(const nuq::OscillationParams& p) {
  const int n = static_cast<int>(p.size());
  const std::vector<int> dims(n, 3);
  std::size_t d = 1;
  for (int i = 0; i < n; ++i) d *= 3;
  Matrix h = Matrix::Zero(d, d);
  const Matrix one = p.b3 * gell_mann(3) + p.b8 * gell_mann(8);
  for (int q = 0; q < n; ++q) h += p.omegas[q] * embed(one, {q}, dims);
  for (int q = 0; q < n; ++q)
    for (int k = q + 1; k < n; ++k) {
      const double j = p.mu * (1 - p.pair_cos(q, k)) / (2.0 * n);
      for (int a = 1; a <= 8; ++a) h += j * embed(kron(gell_mann(a), gell_mann(a)), {q, k}, dims);
    }
  return h;
}

}  // namespace oracle
