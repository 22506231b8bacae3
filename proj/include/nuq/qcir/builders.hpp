#pragma once

#include "nuq/model.hpp"
#include "nuq/qcir/circuit.hpp"

namespace nuq::qcir {

enum class PmnsFlavor { Cnot, CrossResonance };

/// Two-qubit circuit whose physical block is U_PMNS (or its adjoint when
/// `inverse`), up to a global phase. |00> keeps its amplitude up to phase.
Circuit pmns_circuit_qubit(const Mixing& m, PmnsFlavor flavor, bool inverse = false);
/// Single U3x3 gate.
Circuit pmns_circuit_qutrit(const Mixing& m, bool inverse = false);

/// Two Rz gates reproducing exp(-i dt omega (B3 Q3 + B8 Q8)) on the physical
/// block; the |00> phase is left free.
Circuit one_body_step_qubit(double omega, double b3, double b8, double dt);
/// Single diagonal U3x3 gate exp(-i dt omega (B3 l3 + B8 l8)).
Circuit one_body_step_qutrit(double omega, double b3, double b8, double dt);

/// exp(-i dt J sum_a Q_a Q_a) on the physical subspace of 4 qubits (wires 0,1
/// for the first neutrino). TShape puts the center on wire 0 and leaves wires
/// 0 and 1 exchanged; the returned layout records this.
Circuit two_body_step_qubit(double j, double dt, const Connectivity& conn);
/// exp(-i dt J l.l) up to phase: CXt, controlled R12/R02/R01(2 J dt), CXt.
Circuit two_body_step_qutrit(double j, double dt);

/// Partial swap exp(-i phi SWAP) on two qutrits.
Circuit partial_swap_qutrit(double phi);
/// SWAP3 from three CXt.
Circuit swap_from_cxt();

/// Gadgets on 4 qubits. Densified, G A G^dag is diagonal for the matching
/// generator pair.
Circuit gadget_g(int a, int b);
Circuit gadget_k();
/// Three CNOTs onto wire i: O_i Z0Z1Z2Z3 O_i = Z_i.
Circuit gadget_o(int i);
/// Diagonal blocks: parity-sequence rotations about wire roles[0].
Circuit diagonal_d45(double alpha);
Circuit diagonal_d12(double alpha);

/// Rzz(a) from two CNOTs around an Rz.
Circuit rzz_from_cnot(double a);
/// exp(-i a Z(x)X / 2) from Rzz sandwiched by sqrt-X based single-qubit gates.
Circuit rzx_from_rzz(double a);

}  // namespace nuq::qcir
