#include "qgps/qsim/observable.hpp"

namespace qgps::qsim {

Observable Observable::from_terms(int num_qubits,
                                  std::vector<std::pair<double, PauliString>> terms) {
  for (const auto& [c, p] : terms)
    require(p.num_qubits() == num_qubits, "Pauli term length mismatch");
  Observable o;
  o.num_qubits_ = num_qubits;
  o.terms_ = std::move(terms);
  return o;
}

Observable Observable::from_matrix(int num_qubits, Mat matrix, double tol) {
  require(matrix.rows() == dim_of(num_qubits) && matrix.cols() == dim_of(num_qubits),
          "observable matrix has wrong shape");
  require((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() < tol,
          "observable is not Hermitian");
  Observable o;
  o.num_qubits_ = num_qubits;
  o.dense_ = std::move(matrix);
  return o;
}

Mat Observable::to_matrix() const {
  if (dense_) return *dense_;
  const auto d = dim_of(num_qubits_);
  Mat m = Mat::Zero(d, d);
  for (const auto& [c, p] : terms_) m += c * p.to_matrix();
  return m;
}

}  // namespace qgps::qsim
