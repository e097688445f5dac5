#include "qgps/qsim/statevector.hpp"

#include <cmath>

namespace qgps::qsim {

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  require(num_qubits >= 1 && num_qubits <= kMaxQubits, "register size out of range");
  amplitudes_ = Vec::Zero(dim_of(num_qubits));
  amplitudes_(0) = 1.0;
}

Statevector::Statevector(int num_qubits, Vec amplitudes, double norm_tol)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  require(num_qubits >= 1 && num_qubits <= kMaxQubits, "register size out of range");
  require(amplitudes_.size() == dim_of(num_qubits), "amplitude vector has wrong length");
  require(std::abs(amplitudes_.squaredNorm() - 1.0) < norm_tol,
          "statevector is not normalized");
}

Statevector Statevector::basis_state(int num_qubits, std::ptrdiff_t index) {
  require(index >= 0 && index < dim_of(num_qubits), "basis index out of range");
  Vec v = Vec::Zero(dim_of(num_qubits));
  v(index) = 1.0;
  return Statevector(num_qubits, std::move(v));
}

}  // namespace qgps::qsim
