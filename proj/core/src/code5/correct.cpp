#include <algorithm>

#include "qgps/code5/code5.hpp"

namespace qgps::code5 {

namespace {

// Projectors (I +- S_k)/2, cached.
const qsim::Mat& projector(int k, int outcome_plus) {
  static const auto table = [] {
    std::array<std::array<qsim::Mat, 2>, kNumGenerators> t;
    const qsim::Mat id = qsim::Mat::Identity(32, 32);
    for (int g = 0; g < kNumGenerators; ++g) {
      const qsim::Mat s = stabilizer_generators()[g].to_matrix();
      t[g][0] = 0.5 * (id - s);
      t[g][1] = 0.5 * (id + s);
    }
    return t;
  }();
  return table[k][outcome_plus];
}

}  // namespace

CorrectionResult measure_and_correct(const DensityMatrix& dm, qsim::Rng& rng) {
  qsim::require(dm.num_qubits() == kNumQubits, "expected a 5-qubit state");

  qsim::Mat rho = dm.entries();
  Syndrome syn;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int k = 0; k < kNumGenerators; ++k) {
    const qsim::Mat& plus = projector(k, 1);
    double p_plus = (plus * rho).trace().real();
    p_plus = std::clamp(p_plus, 0.0, 1.0);
    const bool got_plus = unif(rng) < p_plus;
    const qsim::Mat& proj = projector(k, got_plus ? 1 : 0);
    const double norm = got_plus ? p_plus : 1.0 - p_plus;
    rho = (proj * rho * proj) / norm;
    syn.bits[k] = got_plus ? 0 : 1;
  }

  CorrectionResult result{DensityMatrix(kNumQubits, std::move(rho)), syn,
                          decode_syndrome(syn)};
  if (result.correction) {
    const qsim::Mat p = to_pauli_string(*result.correction).to_matrix();
    qsim::Mat corrected = p * result.state.entries() * p.adjoint();
    result.state = DensityMatrix(kNumQubits, std::move(corrected));
  }
  return result;
}

}  // namespace qgps::code5
