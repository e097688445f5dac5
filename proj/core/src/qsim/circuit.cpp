#include "qgps/qsim/circuit.hpp"

namespace qgps::qsim {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  require(num_qubits >= 1 && num_qubits <= kMaxQubits, "register size out of range");
}

Circuit& Circuit::add(const Gate& gate) {
  for (int q : gate.targets())
    require(q >= 0 && q < num_qubits_, "gate target outside register");
  gates_.push_back(gate);
  return *this;
}

}  // namespace qgps::qsim
