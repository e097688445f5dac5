#include "qgps/qsim/expectation.hpp"

#include <cmath>

namespace qgps::qsim {

namespace {

double check_real(cdouble v) {
  require(std::abs(v.imag()) < 1e-10, "expectation value has a non-negligible imaginary part");
  return v.real();
}

}  // namespace

double expectation(const Statevector& state, const PauliString& p) {
  require(p.num_qubits() == state.num_qubits(), "Pauli length mismatch");
  const auto flip = p.flip_mask();
  const Vec& amp = state.amplitudes();
  cdouble acc = 0;
  for (std::ptrdiff_t i = 0; i < amp.size(); ++i)
    acc += std::conj(amp(i ^ flip)) * p.basis_coefficient(i) * amp(i);
  return check_real(acc);
}

double expectation(const DensityMatrix& dm, const PauliString& p) {
  require(p.num_qubits() == dm.num_qubits(), "Pauli length mismatch");
  const auto flip = p.flip_mask();
  const Mat& rho = dm.entries();
  cdouble acc = 0;
  // tr(P rho): P maps |i> to coeff(i)|i^flip>, so only rho(i, i^flip) contributes.
  for (std::ptrdiff_t i = 0; i < rho.rows(); ++i)
    acc += p.basis_coefficient(i) * rho(i, i ^ flip);
  return check_real(acc);
}

double expectation(const Statevector& state, const Mat& hermitian) {
  require(hermitian.rows() == state.dim() && hermitian.cols() == state.dim(),
          "observable dimension mismatch");
  require((hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff() < kHermitianTol,
          "observable is not Hermitian");
  return check_real(state.amplitudes().dot(hermitian * state.amplitudes()));
}

double expectation(const DensityMatrix& dm, const Mat& hermitian) {
  require(hermitian.rows() == dm.dim() && hermitian.cols() == dm.dim(),
          "observable dimension mismatch");
  require((hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff() < kHermitianTol,
          "observable is not Hermitian");
  return check_real((hermitian * dm.entries()).trace());
}

double expectation(const Statevector& state, const Observable& obs) {
  require(obs.num_qubits() == state.num_qubits(), "observable register mismatch");
  if (obs.is_dense()) return expectation(state, obs.dense());
  double acc = 0;
  for (const auto& [c, p] : obs.terms()) acc += c * expectation(state, p);
  return acc;
}

double expectation(const DensityMatrix& dm, const Observable& obs) {
  require(obs.num_qubits() == dm.num_qubits(), "observable register mismatch");
  if (obs.is_dense()) return expectation(dm, obs.dense());
  double acc = 0;
  for (const auto& [c, p] : obs.terms()) acc += c * expectation(dm, p);
  return acc;
}

}  // namespace qgps::qsim
