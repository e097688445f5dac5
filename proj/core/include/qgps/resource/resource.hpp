#pragma once

#include <string>
#include <vector>

#include "qgps/qsim/circuit.hpp"
#include "qgps/qsim/density_matrix.hpp"
#include "qgps/qsim/kraus.hpp"

namespace qgps::resource {

struct HardwareProfile {
  std::string name;
  double t_1q = 0.0;  // seconds per single-qubit gate
  double t_2q = 0.0;  // seconds per two-qubit gate
  double f_1q = 1.0;  // single-qubit gate fidelity in (0, 1]
  double f_2q = 1.0;  // two-qubit gate fidelity in (0, 1]
};

void validate(const HardwareProfile& profile);

/// The two built-in platforms: "superconducting" and "trapped-ion".
const std::vector<HardwareProfile>& builtin_profiles();
HardwareProfile profile_by_name(const std::string& name);

struct CircuitCost {
  int n_1q = 0;
  int n_2q = 0;
  int d_1q = 0;
  int d_2q = 0;
};

/// Gate counts by arity, and depths under greedy single-class layering: a gate
/// joins the trailing layer if that layer holds only gates of the same class
/// on disjoint qubits, otherwise it opens a new layer. One-qubit and two-qubit
/// gates never share a layer.
CircuitCost circuit_cost(const qsim::Circuit& circuit);

/// d_1q t_1q + d_2q t_2q: all gates of a layer run simultaneously, layers are
/// back to back.
double total_time(const HardwareProfile& profile, const CircuitCost& cost);

/// F_1q^n_1q * F_2q^n_2q, an upper bound under independent gate noise.
double fidelity_bound(const HardwareProfile& profile, const CircuitCost& cost);

/// Noise attached to each gate: with probability 1 - F a uniformly random
/// non-identity Pauli on the gate's support.
class GateNoiseModel {
 public:
  explicit GateNoiseModel(HardwareProfile profile);

  const HardwareProfile& profile() const { return profile_; }
  qsim::KrausChannel channel_for(const qsim::Gate& gate) const;

 private:
  HardwareProfile profile_;
};

/// Evolve rho through the circuit with the profile's per-gate Pauli noise.
qsim::DensityMatrix apply_circuit_noisy(const qsim::DensityMatrix& dm,
                                        const qsim::Circuit& circuit,
                                        const HardwareProfile& profile);

}  // namespace qgps::resource
