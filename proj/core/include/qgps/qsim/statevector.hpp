#pragma once

#include "qgps/qsim/types.hpp"

namespace qgps::qsim {

/// Normalized pure state of an n-qubit register, n <= 10. Immutable after
/// construction; evolution functions return new values.
class Statevector {
 public:
  /// |0...0> on num_qubits.
  explicit Statevector(int num_qubits);
  /// Validates length 2^num_qubits and unit norm (within tol).
  Statevector(int num_qubits, Vec amplitudes, double norm_tol = kNormTol);

  static Statevector basis_state(int num_qubits, std::ptrdiff_t index);

  int num_qubits() const { return num_qubits_; }
  std::ptrdiff_t dim() const { return amplitudes_.size(); }
  const Vec& amplitudes() const { return amplitudes_; }
  cdouble amplitude(std::ptrdiff_t index) const { return amplitudes_(index); }
  double norm() const { return amplitudes_.norm(); }

 private:
  int num_qubits_;
  Vec amplitudes_;
};

}  // namespace qgps::qsim
