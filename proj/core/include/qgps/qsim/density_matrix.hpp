#pragma once

#include <vector>

#include "qgps/qsim/statevector.hpp"
#include "qgps/qsim/types.hpp"

namespace qgps::qsim {

/// Mixed state of an n-qubit register. Construction validates Hermiticity and
/// unit trace; positivity is an eigenvalue sweep and is checked on demand.
class DensityMatrix {
 public:
  /// |0...0><0...0|.
  explicit DensityMatrix(int num_qubits);
  DensityMatrix(int num_qubits, Mat entries, double tol = kHermitianTol);

  static DensityMatrix from_pure(const Statevector& psi);
  static DensityMatrix maximally_mixed(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::ptrdiff_t dim() const { return entries_.rows(); }
  const Mat& entries() const { return entries_; }
  double trace() const { return entries_.trace().real(); }

  /// Smallest eigenvalue (Hermitian spectrum).
  double min_eigenvalue() const;
  bool is_positive_semidefinite(double tol = kChannelTol) const;

  /// Reduced state on `keep` (ascending qubit indices), tracing out the rest.
  DensityMatrix partial_trace_keep(const std::vector<int>& keep) const;

 private:
  int num_qubits_;
  Mat entries_;
};

}  // namespace qgps::qsim
