#pragma once

#include "qgps/qsim/circuit.hpp"
#include "qgps/qsim/density_matrix.hpp"
#include "qgps/qsim/kraus.hpp"
#include "qgps/qsim/statevector.hpp"

namespace qgps::qsim {

/// U_circuit |state>. Norm is preserved to kNormTol for built-in gates.
Statevector apply_circuit(const Statevector& state, const Circuit& circuit);

/// U rho U^dag for every gate in order.
DensityMatrix apply_circuit(const DensityMatrix& dm, const Circuit& circuit);

Statevector apply_gate(const Statevector& state, const Gate& gate);
DensityMatrix apply_gate(const DensityMatrix& dm, const Gate& gate);

/// sum_k K rho K^dag. Trace-preserving to kChannelTol.
DensityMatrix apply_channel(const DensityMatrix& dm, const KrausChannel& channel);

/// Embed an operator on `targets` (ascending significance order given by the
/// listed qubits) into the full register.
Mat embed_operator(int num_qubits, const std::vector<int>& targets, const Mat& op);

}  // namespace qgps::qsim
