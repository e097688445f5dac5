#include "qgps/qsim/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "qgps/qsim/evolve.hpp"

namespace qgps::qsim {

namespace {

struct MeasurementBasis {
  std::vector<int> qubits;          // one per party
  std::vector<Mat2> rotations;      // V^dag, eigenvectors ordered (-1, +1)
};

MeasurementBasis prepare_basis(int num_qubits,
                               const std::vector<SingleQubitObservable>& observables) {
  MeasurementBasis basis;
  std::ptrdiff_t seen = 0;
  for (const auto& o : observables) {
    require(o.qubit >= 0 && o.qubit < num_qubits, "observable qubit outside register");
    const auto m = std::ptrdiff_t{1} << o.qubit;
    require(!(seen & m), "observables must act on disjoint qubits");
    seen |= m;
    require((o.matrix - o.matrix.adjoint()).cwiseAbs().maxCoeff() < kHermitianTol,
            "observable is not Hermitian");
    require((o.matrix * o.matrix - Mat2::Identity()).cwiseAbs().maxCoeff() < kDichotomicTol,
            "observable is not dichotomic (O^2 != I)");
    Eigen::SelfAdjointEigenSolver<Mat2> es(o.matrix);
    require(es.info() == Eigen::Success, "eigendecomposition failed");
    // Ascending eigenvalues: column 0 <-> -1, column 1 <-> +1.
    basis.qubits.push_back(o.qubit);
    basis.rotations.push_back(es.eigenvectors().adjoint());
  }
  return basis;
}

std::vector<std::vector<int>> draw(const Eigen::VectorXd& probs, int num_qubits,
                                   const MeasurementBasis& basis, int shots, Rng& rng) {
  std::vector<double> weights(probs.data(), probs.data() + probs.size());
  for (double& w : weights) w = std::max(w, 0.0);
  std::discrete_distribution<std::ptrdiff_t> dist(weights.begin(), weights.end());

  std::vector<std::vector<int>> outcomes;
  outcomes.reserve(shots);
  const int parties = static_cast<int>(basis.qubits.size());
  for (int s = 0; s < shots; ++s) {
    const auto idx = dist(rng);
    std::vector<int> row(parties);
    for (int j = 0; j < parties; ++j)
      row[j] = bit_of(idx, basis.qubits[j], num_qubits) ? +1 : -1;
    outcomes.push_back(std::move(row));
  }
  return outcomes;
}

}  // namespace

std::vector<std::vector<int>> sample_product_outcomes(
    const Statevector& state, const std::vector<SingleQubitObservable>& observables,
    int shots, Rng& rng) {
  require(shots >= 0, "negative shot count");
  const int n = state.num_qubits();
  MeasurementBasis basis = prepare_basis(n, observables);
  Statevector rotated = state;
  for (std::size_t j = 0; j < basis.qubits.size(); ++j)
    rotated = apply_gate(rotated, Gate::unitary(basis.qubits[j], basis.rotations[j]));
  Eigen::VectorXd probs = rotated.amplitudes().cwiseAbs2();
  return draw(probs, n, basis, shots, rng);
}

std::vector<std::vector<int>> sample_product_outcomes(
    const DensityMatrix& dm, const std::vector<SingleQubitObservable>& observables,
    int shots, Rng& rng) {
  require(shots >= 0, "negative shot count");
  const int n = dm.num_qubits();
  MeasurementBasis basis = prepare_basis(n, observables);
  DensityMatrix rotated = dm;
  for (std::size_t j = 0; j < basis.qubits.size(); ++j)
    rotated = apply_gate(rotated, Gate::unitary(basis.qubits[j], basis.rotations[j]));
  Eigen::VectorXd probs = rotated.entries().diagonal().real();
  return draw(probs, n, basis, shots, rng);
}

}  // namespace qgps::qsim
