#pragma once

#include "nuq/qcir/builders.hpp"
#include "nuq/trotter.hpp"

namespace nuq::qcir {

/// Empty circuit over the encoding's register.
Circuit register_circuit(const Encoding& enc, std::string label = {});

/// Flavor -> mass change of basis on every site (U_PMNS^dag).
void append_preparation(Circuit& c, const Encoding& enc, const Mixing& m, PmnsFlavor flavor);
/// Mass -> flavor change of basis on every site (U_PMNS), ahead of readout.
void append_measurement_basis(Circuit& c, const Encoding& enc, const Mixing& m, PmnsFlavor flavor);

/// One first-order step: one-body rotations on every site, then each pair
/// block in plan order. TShape needs N = 2 qubit pairs; odd layers run the
/// reversed block so the wire exchange undoes itself every second step.
void append_trotter_layer(Circuit& c, const OscillationParams& p, const Encoding& enc, const TrotterPlan& plan,
                          const Connectivity& conn);

/// Same skeleton at the Clifford point: one-body angles 0, every pair block
/// an exact SWAP.
void append_clifford_layer(Circuit& c, const Encoding& enc, const TrotterPlan& plan, const Connectivity& conn);

/// preparation + `layers` Trotter layers + measurement basis change.
Circuit trotter_circuit(const OscillationParams& p, const Encoding& enc, const TrotterPlan& plan,
                        const Connectivity& conn, PmnsFlavor flavor, int layers);

}  // namespace nuq::qcir
