#include "qgps/qsim/density_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qgps::qsim {

DensityMatrix::DensityMatrix(int num_qubits) : num_qubits_(num_qubits) {
  require(num_qubits >= 1 && num_qubits <= kMaxQubits, "register size out of range");
  entries_ = Mat::Zero(dim_of(num_qubits), dim_of(num_qubits));
  entries_(0, 0) = 1.0;
}

DensityMatrix::DensityMatrix(int num_qubits, Mat entries, double tol)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
  require(num_qubits >= 1 && num_qubits <= kMaxQubits, "register size out of range");
  const auto d = dim_of(num_qubits);
  require(entries_.rows() == d && entries_.cols() == d, "density matrix has wrong shape");
  require((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() < tol,
          "density matrix is not Hermitian");
  require(std::abs(entries_.trace().real() - 1.0) < tol &&
              std::abs(entries_.trace().imag()) < tol,
          "density matrix trace is not 1");
  entries_ = 0.5 * (entries_ + entries_.adjoint().eval());  // exact Hermiticity
}

DensityMatrix DensityMatrix::from_pure(const Statevector& psi) {
  Mat rho = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix(psi.num_qubits(), std::move(rho));
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  const auto d = dim_of(num_qubits);
  Mat rho = Mat::Identity(d, d) / static_cast<double>(d);
  return DensityMatrix(num_qubits, std::move(rho));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Mat> es(entries_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool DensityMatrix::is_positive_semidefinite(double tol) const {
  return min_eigenvalue() >= -tol;
}

DensityMatrix DensityMatrix::partial_trace_keep(const std::vector<int>& keep) const {
  for (int q : keep) require(q >= 0 && q < num_qubits_, "qubit index out of range");
  require(std::is_sorted(keep.begin(), keep.end()) &&
              std::adjacent_find(keep.begin(), keep.end()) == keep.end(),
          "keep list must be strictly ascending");
  require(!keep.empty(), "cannot trace out the whole register");

  const int nk = static_cast<int>(keep.size());
  std::vector<int> traced;
  for (int q = 0; q < num_qubits_; ++q)
    if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);
  const int nt = static_cast<int>(traced.size());

  const auto dk = dim_of(nk);
  const auto dt = std::ptrdiff_t{1} << nt;
  Mat out = Mat::Zero(dk, dk);

  auto full_index = [&](std::ptrdiff_t ik, std::ptrdiff_t it) {
    std::ptrdiff_t idx = 0;
    for (int a = 0; a < nk; ++a)
      if ((ik >> (nk - 1 - a)) & 1) idx |= bit_mask(keep[a], num_qubits_);
    for (int a = 0; a < nt; ++a)
      if ((it >> (nt - 1 - a)) & 1) idx |= bit_mask(traced[a], num_qubits_);
    return idx;
  };

  for (std::ptrdiff_t r = 0; r < dk; ++r)
    for (std::ptrdiff_t c = 0; c < dk; ++c) {
      cdouble acc = 0;
      for (std::ptrdiff_t t = 0; t < dt; ++t)
        acc += entries_(full_index(r, t), full_index(c, t));
      out(r, c) = acc;
    }
  return DensityMatrix(nk, std::move(out));
}

}  // namespace qgps::qsim
