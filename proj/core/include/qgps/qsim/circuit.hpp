#pragma once

#include <vector>

#include "qgps/qsim/gate.hpp"

namespace qgps::qsim {

/// An ordered gate list on a fixed-size register.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  Circuit& add(const Gate& gate);
  Circuit& h(int qubit) { return add(Gate::hadamard(qubit)); }
  Circuit& x(int qubit) { return add(Gate::pauli_x(qubit)); }
  Circuit& y(int qubit) { return add(Gate::pauli_y(qubit)); }
  Circuit& z(int qubit) { return add(Gate::pauli_z(qubit)); }
  Circuit& cnot(int control, int target) { return add(Gate::cnot(control, target)); }
  Circuit& unitary(int qubit, const Mat2& m) { return add(Gate::unitary(qubit, m)); }

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

}  // namespace qgps::qsim
