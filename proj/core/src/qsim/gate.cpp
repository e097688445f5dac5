#include "qgps/qsim/gate.hpp"

#include <cmath>

#include "qgps/qsim/pauli.hpp"

namespace qgps::qsim {

namespace {

const Mat2& hadamard_matrix() {
  static const Mat2 h = [] {
    Mat2 m;
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
  }();
  return h;
}

}  // namespace

Gate::Gate(GateKind kind, std::vector<int> targets)
    : kind_(kind), targets_(std::move(targets)), matrix_(Mat2::Zero()) {}

Gate::Gate(GateKind kind, std::vector<int> targets, const Mat2& m)
    : kind_(kind), targets_(std::move(targets)), matrix_(m) {}

Gate Gate::hadamard(int qubit) { return Gate(GateKind::Hadamard, {qubit}); }
Gate Gate::pauli_x(int qubit) { return Gate(GateKind::PauliX, {qubit}); }
Gate Gate::pauli_y(int qubit) { return Gate(GateKind::PauliY, {qubit}); }
Gate Gate::pauli_z(int qubit) { return Gate(GateKind::PauliZ, {qubit}); }

Gate Gate::cnot(int control, int target) {
  require(control != target, "CNOT control and target must be distinct");
  return Gate(GateKind::Cnot, {control, target});
}

Gate Gate::unitary(int qubit, const Mat2& matrix) {
  require((matrix.adjoint() * matrix - Mat2::Identity()).cwiseAbs().maxCoeff() < kUnitaryTol,
          "custom single-qubit gate is not unitary");
  return Gate(GateKind::Unitary1q, {qubit}, matrix);
}

const Mat2& Gate::matrix1q() const {
  switch (kind_) {
    case GateKind::Hadamard: return hadamard_matrix();
    case GateKind::PauliX: return PauliString::letter_matrix('X');
    case GateKind::PauliY: return PauliString::letter_matrix('Y');
    case GateKind::PauliZ: return PauliString::letter_matrix('Z');
    case GateKind::Unitary1q: return matrix_;
    case GateKind::Cnot: break;
  }
  throw std::logic_error("matrix1q() called on a two-qubit gate");
}

}  // namespace qgps::qsim
