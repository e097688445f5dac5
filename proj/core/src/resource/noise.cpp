#include "qgps/resource/resource.hpp"

#include "qgps/qsim/evolve.hpp"

namespace qgps::resource {

GateNoiseModel::GateNoiseModel(HardwareProfile profile) : profile_(std::move(profile)) {
  validate(profile_);
}

qsim::KrausChannel GateNoiseModel::channel_for(const qsim::Gate& gate) const {
  const double p = gate.arity() == 1 ? 1.0 - profile_.f_1q : 1.0 - profile_.f_2q;
  return qsim::KrausChannel::uniform_pauli(p, gate.targets());
}

qsim::DensityMatrix apply_circuit_noisy(const qsim::DensityMatrix& dm,
                                        const qsim::Circuit& circuit,
                                        const HardwareProfile& profile) {
  const GateNoiseModel noise(profile);
  qsim::DensityMatrix state = dm;
  for (const auto& gate : circuit.gates()) {
    state = qsim::apply_gate(state, gate);
    state = qsim::apply_channel(state, noise.channel_for(gate));
  }
  return state;
}

}  // namespace qgps::resource
