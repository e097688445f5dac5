#include <cmath>

#include "qgps/bell/bell.hpp"
#include "qgps/qsim/pauli.hpp"

namespace qgps::bell {

DichotomicObservable::DichotomicObservable(Mat2 matrix) : matrix_(std::move(matrix)) {
  qsim::require((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() < qsim::kHermitianTol,
                "observable is not Hermitian");
  qsim::require((matrix_ * matrix_ - Mat2::Identity()).cwiseAbs().maxCoeff() <
                    qsim::kDichotomicTol,
                "observable does not square to identity");
}

DichotomicObservable random_dichotomic(qsim::Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double theta = std::acos(2.0 * unif(rng) - 1.0);  // uniform on the sphere
  const double phi = 2.0 * M_PI * unif(rng);
  const Mat2& x = qsim::PauliString::letter_matrix('X');
  const Mat2& y = qsim::PauliString::letter_matrix('Y');
  const Mat2& z = qsim::PauliString::letter_matrix('Z');
  Mat2 o = std::cos(theta) * x + std::sin(theta) * (std::cos(phi) * y + std::sin(phi) * z);
  return DichotomicObservable(std::move(o));
}

DichotomicObservable induced_third_observable(const DichotomicObservable& a0,
                                              const DichotomicObservable& a1) {
  const Mat2 anti = a0.matrix() * a1.matrix() + a1.matrix() * a0.matrix();
  qsim::require(anti.cwiseAbs().maxCoeff() < qsim::kDichotomicTol,
                "inputs do not anticommute");
  const Mat2 comm = a0.matrix() * a1.matrix() - a1.matrix() * a0.matrix();
  return DichotomicObservable(qsim::cdouble(0, -0.5) * comm);
}

MeasurementStrategy::MeasurementStrategy(
    std::vector<std::array<DichotomicObservable, 2>> settings)
    : settings_(std::move(settings)) {
  qsim::require(!settings_.empty() && settings_.size() <= qsim::kMaxQubits,
                "party count out of range");
}

MeasurementStrategy MeasurementStrategy::conjugated(const std::vector<Mat2>& unitaries) const {
  qsim::require(static_cast<int>(unitaries.size()) == parties(),
                "one unitary per party required");
  std::vector<std::array<DichotomicObservable, 2>> out;
  out.reserve(settings_.size());
  for (int j = 0; j < parties(); ++j) {
    const Mat2& v = unitaries[j];
    qsim::require((v.adjoint() * v - Mat2::Identity()).cwiseAbs().maxCoeff() <
                      qsim::kUnitaryTol,
                  "conjugation matrix is not unitary");
    out.push_back({DichotomicObservable(v * settings_[j][0].matrix() * v.adjoint()),
                   DichotomicObservable(v * settings_[j][1].matrix() * v.adjoint())});
  }
  return MeasurementStrategy(std::move(out));
}

}  // namespace qgps::bell
