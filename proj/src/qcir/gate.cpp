#include "nuq/qcir/gate.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "nuq/errors.hpp"

namespace nuq::qcir {

namespace {

constexpr std::array<GateInfo, 25> kInfo{{
    {"H", 1, 2, 0},     {"X", 1, 2, 0},     {"Y", 1, 2, 0},     {"Z", 1, 2, 0},
    {"S", 1, 2, 0},     {"Sdg", 1, 2, 0},   {"Rx", 1, 2, 1},    {"Ry", 1, 2, 1},
    {"Rz", 1, 2, 1},    {"CNOT", 2, 2, 0},  {"CRy", 2, 2, 1},   {"Rzz", 2, 2, 1},
    {"Rzx", 2, 2, 1},   {"SWAP2", 2, 2, 0}, {"CX~", 2, 3, 0},   {"CZ3", 2, 3, 0},
    {"F3", 1, 3, 0},    {"R01", 1, 3, 1},   {"R02", 1, 3, 1},   {"R12", 1, 3, 1},
    {"CR01", 2, 3, 2},  {"CR02", 2, 3, 2},  {"CR12", 2, 3, 2},  {"U3x3", 1, 3, 18},
    {"SWAP3", 2, 3, 0},
}};

Matrix mat2(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix controlled(const Matrix& u) {
  Matrix m = Matrix::Identity(4, 4);
  m.block(2, 2, 2, 2) = u;
  return m;
}

Matrix swap_matrix(int d) {
  Matrix m = Matrix::Zero(d * d, d * d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) m(y * d + x, x * d + y) = 1.0;
  return m;
}

// Levels rotated by CRij, indexed like the kinds.
std::pair<int, int> levels_of(GateKind k) {
  switch (k) {
    case GateKind::R01: case GateKind::CR01: return {0, 1};
    case GateKind::R02: case GateKind::CR02: return {0, 2};
    default: return {1, 2};
  }
}

}  // namespace

const GateInfo& info(GateKind k) { return kInfo.at(static_cast<std::size_t>(k)); }
std::string_view name(GateKind k) { return info(k).name; }

const std::vector<GateKind>& all_kinds() {
  static const std::vector<GateKind> kinds = [] {
    std::vector<GateKind> v;
    for (std::size_t i = 0; i < kInfo.size(); ++i) v.push_back(static_cast<GateKind>(i));
    return v;
  }();
  return kinds;
}

GateKind kind_from_name(std::string_view s) {
  for (GateKind k : all_kinds())
    if (name(k) == s) return k;
  throw DomainError("unknown gate kind '" + std::string(s) + "'");
}

Matrix rz(double a) { return mat2(std::exp(-kI * (a / 2)), 0.0, 0.0, std::exp(kI * (a / 2))); }

Matrix ry(double a) {
  const double c = std::cos(a / 2), s = std::sin(a / 2);
  return mat2(c, -s, s, c);
}

Matrix rx(double a) {
  const double c = std::cos(a / 2), s = std::sin(a / 2);
  return mat2(c, -kI * s, -kI * s, c);
}

Matrix qutrit_rotation(int i, int j, double t) {
  const int k = 3 - i - j;
  Matrix m = Matrix::Zero(3, 3);
  m(i, i) = m(j, j) = std::cos(t);
  m(i, j) = m(j, i) = -kI * std::sin(t);
  m(k, k) = std::exp(-kI * t);
  return m;
}

Matrix u3x3_from_params(std::span<const double> p) {
  if (p.size() != 18) throw DomainError("U3x3 needs 18 parameters");
  Matrix m(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = cplx(p[2 * (3 * r + c)], p[2 * (3 * r + c) + 1]);
  return m;
}

std::vector<double> u3x3_params(const Matrix& u) {
  std::vector<double> p;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      p.push_back(u(r, c).real());
      p.push_back(u(r, c).imag());
    }
  return p;
}

Matrix gate_matrix(const Gate& g) {
  const double s2 = 1.0 / std::sqrt(2.0);
  const auto p = [&g](std::size_t i) { return g.params.at(i); };
  switch (g.kind) {
    case GateKind::H: return mat2(s2, s2, s2, -s2);
    case GateKind::X: return mat2(0.0, 1.0, 1.0, 0.0);
    case GateKind::Y: return mat2(0.0, -kI, kI, 0.0);
    case GateKind::Z: return mat2(1.0, 0.0, 0.0, -1.0);
    case GateKind::S: return mat2(1.0, 0.0, 0.0, kI);
    case GateKind::Sdg: return mat2(1.0, 0.0, 0.0, -kI);
    case GateKind::Rx: return rx(p(0));
    case GateKind::Ry: return ry(p(0));
    case GateKind::Rz: return rz(p(0));
    case GateKind::CNOT: return controlled(mat2(0.0, 1.0, 1.0, 0.0));
    case GateKind::CRy: return controlled(ry(p(0)));
    case GateKind::Rzz: {
      const cplx a = std::exp(-kI * (p(0) / 2)), b = std::conj(a);
      Matrix m = Matrix::Zero(4, 4);
      m.diagonal() << a, b, b, a;
      return m;
    }
    case GateKind::Rzx: {
      Matrix m = Matrix::Zero(4, 4);
      m.block(0, 0, 2, 2) = rx(p(0));
      m.block(2, 2, 2, 2) = rx(-p(0));
      return m;
    }
    case GateKind::SWAP2: return swap_matrix(2);
    case GateKind::CXt: {
      Matrix m = Matrix::Zero(9, 9);
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) m(3 * x + ((6 - x - y) % 3), 3 * x + y) = 1.0;
      return m;
    }
    case GateKind::CZ3: {
      Matrix m = Matrix::Zero(9, 9);
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
          m(3 * x + y, 3 * x + y) = std::exp(kI * (2.0 * std::numbers::pi * ((x * y) % 3) / 3.0));
      return m;
    }
    case GateKind::F3: {
      Matrix m(3, 3);
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          m(j, k) = std::exp(kI * (2.0 * std::numbers::pi * ((j * k) % 3) / 3.0)) / std::sqrt(3.0);
      return m;
    }
    case GateKind::R01:
    case GateKind::R02:
    case GateKind::R12: {
      auto [i, j] = levels_of(g.kind);
      return qutrit_rotation(i, j, p(0));
    }
    case GateKind::CR01:
    case GateKind::CR02:
    case GateKind::CR12: {
      auto [i, j] = levels_of(g.kind);
      const int cv = static_cast<int>(std::lround(p(0)));
      Matrix r = qutrit_rotation(i, j, p(1));
      Matrix m = Matrix::Identity(9, 9);
      // wire order (target, control): index = 3 * target + control
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) m(3 * a + cv, 3 * b + cv) = r(a, b);
      return m;
    }
    case GateKind::U3x3: return u3x3_from_params(g.params);
    case GateKind::SWAP3: return swap_matrix(3);
  }
  throw DomainError("gate_matrix: unhandled kind");
}

void validate(const Gate& g, std::span<const int> dims) {
  const auto& gi = info(g.kind);
  const std::string nm(gi.name);
  if (static_cast<int>(g.wires.size()) != gi.arity)
    throw ConstructionError(nm + ": expected " + std::to_string(gi.arity) + " wires");
  if (static_cast<int>(g.params.size()) != gi.num_params)
    throw ConstructionError(nm + ": expected " + std::to_string(gi.num_params) + " parameters");
  std::set<int> seen;
  for (int w : g.wires) {
    if (w < 0 || w >= static_cast<int>(dims.size()))
      throw ConstructionError(nm + ": wire " + std::to_string(w) + " out of range");
    if (dims[w] != gi.wire_dim)
      throw ConstructionError(nm + ": wire " + std::to_string(w) + " has dimension " + std::to_string(dims[w]));
    if (!seen.insert(w).second) throw ConstructionError(nm + ": repeated wire");
  }
  for (double x : g.params)
    if (!std::isfinite(x)) throw ConstructionError(nm + ": non-finite parameter");
  if (g.kind == GateKind::CR01 || g.kind == GateKind::CR02 || g.kind == GateKind::CR12) {
    const double cv = g.params[0];
    if (cv != 0.0 && cv != 1.0 && cv != 2.0) throw ConstructionError(nm + ": control value must be 0, 1 or 2");
  }
}

std::vector<Gate> adjoint(const Gate& g) {
  Gate a = g;
  switch (g.kind) {
    case GateKind::S: a.kind = GateKind::Sdg; return {a};
    case GateKind::Sdg: a.kind = GateKind::S; return {a};
    case GateKind::Rx: case GateKind::Ry: case GateKind::Rz: case GateKind::CRy:
    case GateKind::Rzz: case GateKind::Rzx: case GateKind::R01: case GateKind::R02: case GateKind::R12:
      a.params[0] = -a.params[0];
      return {a};
    case GateKind::CR01: case GateKind::CR02: case GateKind::CR12:
      a.params[1] = -a.params[1];
      return {a};
    case GateKind::CZ3: return {g, g};
    case GateKind::F3:
      return {Gate{GateKind::U3x3, g.wires, u3x3_params(gate_matrix(g).adjoint())}};
    case GateKind::U3x3: a.params = u3x3_params(gate_matrix(g).adjoint()); return {a};
    default: return {a};  // self-inverse kinds
  }
}

}  // namespace nuq::qcir
