#include "nuq/qcir/trotter_circuit.hpp"

#include <numbers>
#include <numeric>

#include "nuq/errors.hpp"

namespace nuq::qcir {

namespace {

bool t_shape_qubits(const Encoding& enc, const Connectivity& conn) {
  if (conn.kind != Connectivity::Kind::TShape || enc.kind != EncodingKind::QubitPair) return false;
  if (enc.n != 2) throw DomainError("T connectivity is defined for two neutrinos (four qubits)");
  return true;
}

std::vector<int> pair_wires(const Encoding& enc, int q, int k) {
  auto w = enc.site_wires(q);
  for (int x : enc.site_wires(k)) w.push_back(x);
  return w;
}

void append_pair(Circuit& c, const Encoding& enc, int q, int k, double j, double dt, const Connectivity& conn) {
  const auto wires = pair_wires(enc, q, k);
  if (enc.kind == EncodingKind::Qutrit) {
    c.append(two_body_step_qutrit(j, dt), wires);
    return;
  }
  if (!t_shape_qubits(enc, conn)) {
    c.append(two_body_step_qubit(j, dt, conn), wires);
    return;
  }
  if (c.identity_layout()) {
    c.append(two_body_step_qubit(j, dt, conn), wires);
  } else {
    // Wires 0 and 1 are exchanged: the reversed block of -J dt takes that
    // layout in and returns the identity layout.
    const Circuit back = two_body_step_qubit(-j, dt, conn).inverse_gates();
    for (const Gate& g : back.gates()) c.add(g);
    std::vector<int> id(c.num_wires());
    std::iota(id.begin(), id.end(), 0);
    c.set_layout(id);
  }
}

void append_one_body(Circuit& c, const Encoding& enc, double omega, double b3, double b8, double dt, int q) {
  if (enc.kind == EncodingKind::Qutrit)
    c.append(one_body_step_qutrit(omega, b3, b8, dt), enc.site_wires(q));
  else
    c.append(one_body_step_qubit(omega, b3, b8, dt), enc.site_wires(q));
}

void append_site_basis(Circuit& c, const Encoding& enc, const Mixing& m, PmnsFlavor flavor, bool inverse) {
  const Circuit site = enc.kind == EncodingKind::Qutrit ? pmns_circuit_qutrit(m, inverse)
                                                        : pmns_circuit_qubit(m, flavor, inverse);
  for (int q = 0; q < enc.n; ++q) c.append(site, enc.site_wires(q));
}

}  // namespace

Circuit register_circuit(const Encoding& enc, std::string label) {
  return Circuit(enc.register_dims(), std::move(label));
}

void append_preparation(Circuit& c, const Encoding& enc, const Mixing& m, PmnsFlavor flavor) {
  append_site_basis(c, enc, m, flavor, true);
}

void append_measurement_basis(Circuit& c, const Encoding& enc, const Mixing& m, PmnsFlavor flavor) {
  append_site_basis(c, enc, m, flavor, false);
}

void append_trotter_layer(Circuit& c, const OscillationParams& p, const Encoding& enc, const TrotterPlan& plan,
                          const Connectivity& conn) {
  plan.validate(enc.n);
  for (int q = 0; q < enc.n; ++q) append_one_body(c, enc, p.omegas[q], p.b3, p.b8, plan.dt, q);
  for (auto [q, k] : plan.pair_order) append_pair(c, enc, q, k, coupling(q, k, p), plan.dt, conn);
}

void append_clifford_layer(Circuit& c, const Encoding& enc, const TrotterPlan& plan, const Connectivity& conn) {
  plan.validate(enc.n);
  for (int q = 0; q < enc.n; ++q) append_one_body(c, enc, 0.0, 0.0, 1.0, 0.0, q);
  // J dt = pi/4 makes every pair factor proportional to SWAP.
  for (auto [q, k] : plan.pair_order) append_pair(c, enc, q, k, std::numbers::pi / 4, 1.0, conn);
}

Circuit trotter_circuit(const OscillationParams& p, const Encoding& enc, const TrotterPlan& plan,
                        const Connectivity& conn, PmnsFlavor flavor, int layers) {
  Circuit c = register_circuit(enc, "trotter");
  append_preparation(c, enc, p.mixing, flavor);
  for (int l = 0; l < layers; ++l) append_trotter_layer(c, p, enc, plan, conn);
  append_measurement_basis(c, enc, p.mixing, flavor);
  return c;
}

}  // namespace nuq::qcir
