#include "qgps/qsim/kraus.hpp"

#include <algorithm>
#include <cmath>

#include "qgps/qsim/pauli.hpp"

namespace qgps::qsim {

KrausChannel::KrausChannel(std::vector<Mat> operators, std::vector<int> targets, double tol)
    : operators_(std::move(operators)), targets_(std::move(targets)) {
  require(!operators_.empty(), "Kraus channel needs at least one operator");
  require(!targets_.empty() && targets_.size() <= 2, "channel support must be 1 or 2 qubits");
  std::vector<int> sorted = targets_;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "channel targets must be distinct");

  const auto d = dim_of(static_cast<int>(targets_.size()));
  Mat acc = Mat::Zero(d, d);
  for (const Mat& k : operators_) {
    require(k.rows() == d && k.cols() == d, "Kraus operator has wrong shape");
    acc += k.adjoint() * k;
  }
  require((acc - Mat::Identity(d, d)).cwiseAbs().maxCoeff() < tol,
          "Kraus operators are not complete (sum K^dag K != I)");
}

KrausChannel KrausChannel::identity(int qubit) {
  return KrausChannel({Mat::Identity(2, 2)}, {qubit});
}

KrausChannel KrausChannel::depolarizing(double p, int qubit) {
  require(p >= 0.0 && p <= 1.0, "depolarizing probability out of range");
  std::vector<Mat> ops;
  ops.push_back(std::sqrt(1.0 - 0.75 * p) * Mat::Identity(2, 2));
  for (char c : {'X', 'Y', 'Z'})
    ops.push_back(std::sqrt(0.25 * p) * Mat(PauliString::letter_matrix(c)));
  return KrausChannel(std::move(ops), {qubit});
}

KrausChannel KrausChannel::dephasing(int qubit) {
  Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return KrausChannel({p0, p1}, {qubit});
}

KrausChannel KrausChannel::uniform_pauli(double p, std::vector<int> targets) {
  require(p >= 0.0 && p <= 1.0, "error probability out of range");
  require(targets.size() == 1 || targets.size() == 2, "uniform Pauli supports 1 or 2 qubits");
  const int k = static_cast<int>(targets.size());

  std::vector<Mat> ops;
  const auto d = dim_of(k);
  ops.push_back(std::sqrt(1.0 - p) * Mat::Identity(d, d));
  if (p > 0.0) {
    const int npauli = (k == 1) ? 3 : 15;
    const double w = std::sqrt(p / npauli);
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    if (k == 1) {
      for (int a = 1; a < 4; ++a)
        ops.push_back(w * Mat(PauliString::letter_matrix(letters[a])));
    } else {
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          if (a == 0 && b == 0) continue;
          ops.push_back(w * PauliString(std::string{letters[a], letters[b]}).to_matrix());
        }
    }
  }
  return KrausChannel(std::move(ops), std::move(targets));
}

}  // namespace qgps::qsim
