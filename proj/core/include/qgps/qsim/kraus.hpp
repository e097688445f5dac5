#pragma once

#include <vector>

#include "qgps/qsim/types.hpp"

namespace qgps::qsim {

/// A CPTP map given by Kraus operators on a qubit subset. Completeness
/// (sum K^dag K = I) is validated on construction.
class KrausChannel {
 public:
  KrausChannel(std::vector<Mat> operators, std::vector<int> targets,
               double tol = kChannelTol);

  const std::vector<Mat>& operators() const { return operators_; }
  const std::vector<int>& targets() const { return targets_; }
  int support_size() const { return static_cast<int>(targets_.size()); }

  static KrausChannel identity(int qubit);
  /// Replace-with-maximally-mixed depolarizing on one qubit:
  /// rho -> (1-p) rho + p I/2 (x) tr_q rho.
  static KrausChannel depolarizing(double p, int qubit);
  /// Total Z-basis dephasing (projective intercept-resend in Z).
  static KrausChannel dephasing(int qubit);
  /// With probability p, a uniformly random non-identity Pauli on the support.
  static KrausChannel uniform_pauli(double p, std::vector<int> targets);

 private:
  std::vector<Mat> operators_;
  std::vector<int> targets_;
};

}  // namespace qgps::qsim
