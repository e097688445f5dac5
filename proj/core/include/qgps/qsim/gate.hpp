#pragma once

#include <vector>

#include "qgps/qsim/types.hpp"

namespace qgps::qsim {

enum class GateKind { Hadamard, PauliX, PauliY, PauliZ, Cnot, Unitary1q };

/// A circuit element: a named single-qubit gate, a CNOT, or a custom 2x2 unitary.
class Gate {
 public:
  static Gate hadamard(int qubit);
  static Gate pauli_x(int qubit);
  static Gate pauli_y(int qubit);
  static Gate pauli_z(int qubit);
  static Gate cnot(int control, int target);
  static Gate unitary(int qubit, const Mat2& matrix);

  GateKind kind() const { return kind_; }
  int arity() const { return kind_ == GateKind::Cnot ? 2 : 1; }
  const std::vector<int>& targets() const { return targets_; }
  int qubit() const { return targets_[0]; }
  int control() const { return targets_[0]; }
  int target() const { return targets_[kind_ == GateKind::Cnot ? 1 : 0]; }

  /// 2x2 matrix of a single-qubit gate (throws for CNOT).
  const Mat2& matrix1q() const;

 private:
  Gate(GateKind kind, std::vector<int> targets);
  Gate(GateKind kind, std::vector<int> targets, const Mat2& m);

  GateKind kind_;
  std::vector<int> targets_;
  Mat2 matrix_;
};

}  // namespace qgps::qsim
