#include "nuq/su3.hpp"

#include <cmath>
#include <string>

#include "nuq/errors.hpp"

namespace nuq::su3 {

namespace {

void check_index(int i, const char* what) {
  if (i < 1 || i > 8) throw DomainError(std::string(what) + ": index " + std::to_string(i) + " outside 1..8");
}

std::array<Matrix, 8> build_gell_mann() {
  std::array<Matrix, 8> l;
  for (auto& m : l) m = Matrix::Zero(3, 3);
  l[0](0, 1) = l[0](1, 0) = 1.0;
  l[1](0, 1) = -kI;
  l[1](1, 0) = kI;
  l[2](0, 0) = 1.0;
  l[2](1, 1) = -1.0;
  l[3](0, 2) = l[3](2, 0) = 1.0;
  l[4](0, 2) = -kI;
  l[4](2, 0) = kI;
  l[5](1, 2) = l[5](2, 1) = 1.0;
  l[6](1, 2) = -kI;
  l[6](2, 1) = kI;
  const double r3 = 1.0 / std::sqrt(3.0);
  l[7](0, 0) = r3;
  l[7](1, 1) = r3;
  l[7](2, 2) = -2.0 * r3;
  return l;
}

using FTable = std::array<std::array<std::array<double, 8>, 8>, 8>;

FTable build_f() {
  FTable f{};
  auto put = [&f](int i, int j, int k, double v) {
    const int a = i - 1, b = j - 1, c = k - 1;
    f[a][b][c] = v;
    f[b][c][a] = v;
    f[c][a][b] = v;
    f[b][a][c] = -v;
    f[a][c][b] = -v;
    f[c][b][a] = -v;
  };
  const double h = 0.5;
  const double s = std::sqrt(3.0) / 2.0;
  put(1, 2, 3, 1.0);
  put(1, 4, 7, h);
  put(1, 5, 6, -h);
  put(2, 4, 6, h);
  put(2, 5, 7, h);
  put(3, 4, 5, h);
  put(3, 6, 7, -h);
  put(4, 5, 8, s);
  put(6, 7, 8, s);
  return f;
}

std::array<Matrix, 8> build_qubit() {
  std::array<Matrix, 8> q;
  const auto& l = gell_mann_all();
  for (int i = 0; i < 8; ++i) {
    q[i] = Matrix::Zero(4, 4);
    q[i].block(1, 1, 3, 3) = l[i];
  }
  return q;
}

}  // namespace

std::array<Matrix, 8> gell_mann_all() {
  static const std::array<Matrix, 8> table = build_gell_mann();
  return table;
}

std::array<Matrix, 8> qubit_generators_all() {
  static const std::array<Matrix, 8> table = build_qubit();
  return table;
}

const Matrix& gell_mann(int i) {
  check_index(i, "gell_mann");
  static const std::array<Matrix, 8> table = build_gell_mann();
  return table[i - 1];
}

double structure_constant(int i, int j, int k) {
  check_index(i, "structure_constant");
  check_index(j, "structure_constant");
  check_index(k, "structure_constant");
  static const FTable f = build_f();
  return f[i - 1][j - 1][k - 1];
}

const Matrix& qubit_generator(int i) {
  check_index(i, "qubit_generator");
  static const std::array<Matrix, 8> table = build_qubit();
  return table[i - 1];
}

Matrix lambda_plus() { return 0.5 * (gell_mann(3) + std::sqrt(3.0) * gell_mann(8)); }
Matrix lambda_minus() { return 0.5 * (-gell_mann(3) + std::sqrt(3.0) * gell_mann(8)); }

Matrix casimir_pair(const std::array<Matrix, 8>& g) {
  const auto d = g[0].rows();
  Matrix out = Matrix::Zero(d * d, d * d);
  for (const auto& m : g) out += kron(m, m);
  return out;
}

CasimirSwap casimir_swap(int n) {
  Matrix acc;
  if (n == 2) {
    Matrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -kI, kI, 0;
    z << 1, 0, 0, -1;
    acc = kron(x, x) + kron(y, y) + kron(z, z);
  } else if (n == 3) {
    acc = casimir_pair(gell_mann_all());
  } else {
    throw DomainError("casimir_swap: unsupported dimension " + std::to_string(n));
  }
  CasimirSwap out;
  out.lhs = Matrix::Identity(n * n, n * n) / static_cast<double>(n) + 0.5 * acc;
  out.swap = Matrix::Zero(n * n, n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.swap(y * n + x, x * n + y) = 1.0;
  return out;
}

}  // namespace nuq::su3
