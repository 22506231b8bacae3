#include "nuq/qcir/builders.hpp"

#include <cmath>
#include <numbers>

#include "nuq/errors.hpp"

namespace nuq::qcir {

namespace {

constexpr double kPi = std::numbers::pi;

const Dims kTwoQubits{2, 2};
const Dims kFourQubits{2, 2, 2, 2};
const Dims kTwoQutrits{3, 3};

// CRy(theta) with the controlled rotation carried by one cross-resonance pulse.
void cry_cross_resonance(Circuit& c, int ctrl, int tgt, double theta) {
  c.add(GateKind::Ry, {tgt}, {theta / 2});
  c.add(GateKind::S, {tgt});
  c.add(GateKind::Rzx, {ctrl, tgt}, {theta / 2});
  c.add(GateKind::Sdg, {tgt});
}

// Rz on roles[0] interleaved with CNOTs from the other roles; the parity
// sequence visits every Z-string on roles[1..3] that includes roles[0].
void parity_block(Circuit& c, const std::array<int, 4>& roles, double alpha, const std::array<int, 8>& pattern) {
  static constexpr std::array<int, 8> seq{3, 1, 2, 1, 3, 1, 2, 1};
  for (int k = 0; k < 8; ++k) {
    c.add(GateKind::Rz, {roles[0]}, {alpha * pattern[k]});
    c.add(GateKind::CNOT, {roles[seq[k]], roles[0]});
  }
}

constexpr std::array<int, 8> kP45{1, -1, 1, -1, 1, -1, 1, -1};
constexpr std::array<int, 8> kP12{1, 1, -1, 1, -1, -1, 1, -1};

}  // namespace

Circuit pmns_circuit_qubit(const Mixing& m, PmnsFlavor flavor, bool inverse) {
  Circuit c(kTwoQubits, flavor == PmnsFlavor::Cnot ? "pmns_cnot" : "pmns_cr");
  // 1-2 Givens rotation
  c.add(GateKind::Ry, {0}, {kPi / 2});
  if (flavor == PmnsFlavor::Cnot) {
    c.add(GateKind::CNOT, {0, 1});
    c.add(GateKind::Ry, {0}, {-m.theta12});
    c.add(GateKind::Ry, {1}, {-m.theta12});
    c.add(GateKind::CNOT, {0, 1});
  } else {
    c.add(GateKind::Sdg, {0});
    c.add(GateKind::Sdg, {1});
    c.add(GateKind::Rzx, {0, 1}, {-m.theta12});
    c.add(GateKind::S, {1});
    c.add(GateKind::H, {1});
    c.add(GateKind::Rzx, {1, 0}, {-m.theta12});
    c.add(GateKind::H, {1});
    c.add(GateKind::S, {0});
  }
  c.add(GateKind::Ry, {0}, {-kPi / 2});

  // 1-3 block with the CP phase
  c.add(GateKind::Rz, {0}, {-m.delta_cp});
  if (flavor == PmnsFlavor::Cnot)
    c.add(GateKind::CRy, {1, 0}, {-2 * m.theta13});
  else
    cry_cross_resonance(c, 1, 0, -2 * m.theta13);
  c.add(GateKind::Rz, {0}, {m.delta_cp});

  // 2-3 block
  if (flavor == PmnsFlavor::Cnot)
    c.add(GateKind::CRy, {0, 1}, {-2 * m.theta23});
  else
    cry_cross_resonance(c, 0, 1, -2 * m.theta23);

  if (!inverse) return c;
  Circuit inv = c.inverse_gates();
  inv.set_label(c.label() + "_dag");
  return inv;
}

Circuit pmns_circuit_qutrit(const Mixing& m, bool inverse) {
  Circuit c(Dims{3}, inverse ? "pmns_dag" : "pmns");
  const Matrix u = pmns_matrix(m);
  c.add(GateKind::U3x3, {0}, u3x3_params(inverse ? Matrix(u.adjoint()) : u));
  return c;
}

Circuit one_body_step_qubit(double omega, double b3, double b8, double dt) {
  Circuit c(kTwoQubits, "one_body");
  const double r3 = std::sqrt(3.0);
  c.add(GateKind::Rz, {0}, {omega * dt * (b3 + r3 * b8)});
  c.add(GateKind::Rz, {1}, {omega * dt * (r3 * b8 - b3)});
  return c;
}

Circuit one_body_step_qutrit(double omega, double b3, double b8, double dt) {
  Circuit c(Dims{3}, "one_body");
  const double r3 = std::sqrt(3.0);
  const std::array<double, 3> d3{1.0, -1.0, 0.0};
  const std::array<double, 3> d8{1.0 / r3, 1.0 / r3, -2.0 / r3};
  Matrix u = Matrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) u(k, k) = std::exp(-kI * (dt * omega * (b3 * d3[k] + b8 * d8[k])));
  c.add(GateKind::U3x3, {0}, u3x3_params(u));
  return c;
}

Circuit two_body_step_qubit(double j, double dt, const Connectivity& conn) {
  const double theta = j * dt;
  const double a = theta / 2;
  Circuit c(kFourQubits, "two_body");

  // Q44+Q55 in the G13 frame, then Q33+Q88 pieces on Z2
  c.add(GateKind::CNOT, {0, 2});
  c.add(GateKind::H, {0});
  parity_block(c, {0, 1, 2, 3}, a, kP45);
  c.add(GateKind::H, {0});
  c.add(GateKind::Rz, {2}, {theta});

  // Q11+Q22 in the K frame; K's CNOT(0,2) cancels against G13's.
  c.add(GateKind::CNOT, {0, 1});
  c.add(GateKind::CNOT, {0, 3});
  c.add(GateKind::H, {0});
  parity_block(c, {0, 1, 2, 3}, a, kP12);
  c.add(GateKind::H, {0});

  if (conn.kind == Connectivity::Kind::AllToAll) {
    // K^dag merged with O4
    c.add(GateKind::CNOT, {0, 1});
    c.add(GateKind::CNOT, {0, 2});
    c.add(GateKind::CNOT, {1, 3});
    c.add(GateKind::CNOT, {2, 3});
    c.add(GateKind::Rz, {3}, {theta});
    // O4 merged with G24's CNOT
    c.add(GateKind::CNOT, {0, 3});
    c.add(GateKind::CNOT, {2, 3});
    c.add(GateKind::H, {1});
    parity_block(c, {1, 0, 3, 2}, a, kP45);
    c.add(GateKind::H, {1});
    c.add(GateKind::Rz, {3}, {theta});
    c.add(GateKind::CNOT, {1, 3});
  } else {
    // K^dag without CNOT(0,1), which cancels the first CNOT of the swap
    c.add(GateKind::CNOT, {0, 2});
    c.add(GateKind::CNOT, {0, 3});
    c.add(GateKind::CNOT, {1, 0});
    c.add(GateKind::CNOT, {0, 1});
    // wire 0 now holds the second qubit of the first neutrino
    for (int w : {1, 2, 3}) c.add(GateKind::CNOT, {w, 0});
    c.add(GateKind::Rz, {0}, {theta});
    for (int w : {1, 2, 3}) c.add(GateKind::CNOT, {w, 0});
    c.add(GateKind::CNOT, {0, 3});
    c.add(GateKind::H, {0});
    parity_block(c, {0, 1, 3, 2}, a, kP45);
    c.add(GateKind::H, {0});
    c.add(GateKind::Rz, {3}, {theta});
    c.add(GateKind::CNOT, {0, 3});
    c.set_layout({1, 0, 2, 3});
  }
  check_connectivity(c, conn);
  return c;
}

Circuit partial_swap_qutrit(double phi) {
  Circuit c(kTwoQutrits, "partial_swap");
  c.add(GateKind::CXt, {0, 1});
  c.add(GateKind::CR12, {0, 1}, {0.0, phi});
  c.add(GateKind::CR02, {0, 1}, {1.0, phi});
  c.add(GateKind::CR01, {0, 1}, {2.0, phi});
  c.add(GateKind::CXt, {0, 1});
  return c;
}

Circuit two_body_step_qutrit(double j, double dt) {
  // l.l = 2 SWAP - 2/3, so the pair factor is exp(-2i J dt SWAP) up to phase.
  Circuit c = partial_swap_qutrit(2.0 * j * dt);
  c.set_label("two_body");
  return c;
}

Circuit swap_from_cxt() {
  Circuit c(kTwoQutrits, "swap3");
  c.add(GateKind::CXt, {0, 1});
  c.add(GateKind::CXt, {1, 0});
  c.add(GateKind::CXt, {0, 1});
  return c;
}

Circuit gadget_g(int a, int b) {
  Circuit c(kFourQubits, "G" + std::to_string(a + 1) + std::to_string(b + 1));
  c.add(GateKind::CNOT, {a, b});
  c.add(GateKind::H, {a});
  return c;
}

Circuit gadget_k() {
  Circuit c(kFourQubits, "K");
  for (int w : {1, 2, 3}) c.add(GateKind::CNOT, {0, w});
  c.add(GateKind::H, {0});
  return c;
}

Circuit gadget_o(int i) {
  if (i < 0 || i > 3) throw DomainError("gadget_o: wire outside 0..3");
  Circuit c(kFourQubits, "O" + std::to_string(i + 1));
  for (int w = 0; w < 4; ++w)
    if (w != i) c.add(GateKind::CNOT, {w, i});
  return c;
}

Circuit diagonal_d45(double alpha) {
  Circuit c(kFourQubits, "D45");
  parity_block(c, {0, 1, 2, 3}, alpha, kP45);
  return c;
}

Circuit diagonal_d12(double alpha) {
  Circuit c(kFourQubits, "D12");
  parity_block(c, {0, 1, 2, 3}, alpha, kP12);
  return c;
}

Circuit rzz_from_cnot(double a) {
  Circuit c(kTwoQubits, "rzz");
  c.add(GateKind::CNOT, {0, 1});
  c.add(GateKind::Rz, {1}, {a});
  c.add(GateKind::CNOT, {0, 1});
  return c;
}

Circuit rzx_from_rzz(double a) {
  Circuit c(kTwoQubits, "rzx");
  auto u11 = [&c] {
    c.add(GateKind::Rz, {1}, {kPi / 2});
    c.add(GateKind::Rx, {1}, {kPi / 2});
    c.add(GateKind::Rz, {1}, {kPi / 2});
  };
  u11();
  c.add(GateKind::Rzz, {0, 1}, {a});
  u11();
  return c;
}

}  // namespace nuq::qcir
