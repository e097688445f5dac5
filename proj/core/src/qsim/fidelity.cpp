#include "qgps/qsim/fidelity.hpp"

#include <algorithm>
#include <cmath>

namespace qgps::qsim {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

Mat hermitian_sqrt(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  require(es.info() == Eigen::Success, "eigendecomposition failed");
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const Statevector& a, const Statevector& b) {
  require(a.dim() == b.dim(), "state dimension mismatch");
  return clamp01(std::norm(a.amplitudes().dot(b.amplitudes())));
}

double fidelity(const Statevector& a, const DensityMatrix& b) {
  require(a.dim() == b.dim(), "state dimension mismatch");
  const cdouble v = a.amplitudes().dot(b.entries() * a.amplitudes());
  return clamp01(v.real());
}

double fidelity(const DensityMatrix& a, const Statevector& b) { return fidelity(b, a); }

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  require(a.dim() == b.dim(), "state dimension mismatch");
  const Mat sa = hermitian_sqrt(a.entries());
  const Mat inner = sa * b.entries() * sa;
  Eigen::SelfAdjointEigenSolver<Mat> es(inner, Eigen::EigenvaluesOnly);
  require(es.info() == Eigen::Success, "eigendecomposition failed");
  const double tr = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return clamp01(tr * tr);
}

}  // namespace qgps::qsim
