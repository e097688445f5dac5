#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qgps/qsim/pauli.hpp"
#include "qgps/qsim/types.hpp"

namespace qgps::qsim {

/// Hermitian observable: either a real combination of Pauli strings or a dense
/// matrix. Dense observables are validated Hermitian on construction.
class Observable {
 public:
  static Observable from_terms(int num_qubits, std::vector<std::pair<double, PauliString>> terms);
  static Observable from_matrix(int num_qubits, Mat matrix, double tol = kHermitianTol);

  int num_qubits() const { return num_qubits_; }
  bool is_dense() const { return dense_.has_value(); }
  const std::vector<std::pair<double, PauliString>>& terms() const { return terms_; }
  const Mat& dense() const { return *dense_; }

  Mat to_matrix() const;

 private:
  Observable() = default;
  int num_qubits_ = 0;
  std::vector<std::pair<double, PauliString>> terms_;
  std::optional<Mat> dense_;
};

}  // namespace qgps::qsim
