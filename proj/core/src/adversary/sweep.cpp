#include "qgps/adversary/adversary.hpp"
#include "qgps/bell/bell.hpp"
#include "qgps/qsim/fidelity.hpp"

namespace qgps::adversary {

DensityMatrix best_classical_product_state() {
  const auto i5 = bell::builtin_functional(bell::FunctionalKind::I5);
  const auto strat = bell::optimal_strategy(bell::FunctionalKind::I5);
  const auto best = bell::classical_maximum(i5);

  qsim::Vec amp = qsim::Vec::Ones(1);
  for (int j = 0; j < i5.parties; ++j) {
    Eigen::SelfAdjointEigenSolver<qsim::Mat2> es(strat.setting(j, 0).matrix());
    // Ascending eigenvalues: column 0 <-> -1, column 1 <-> +1.
    const Eigen::Vector2cd v = es.eigenvectors().col(best.assignment[j][0] > 0 ? 1 : 0);
    qsim::Vec next(amp.size() * 2);
    for (Eigen::Index i = 0; i < amp.size(); ++i) {
      next(2 * i) = amp(i) * v(0);
      next(2 * i + 1) = amp(i) * v(1);
    }
    amp = std::move(next);
  }
  return DensityMatrix::from_pure(qsim::Statevector(i5.parties, std::move(amp)));
}

std::vector<AttackOutcome> attack_sweep(const std::vector<AttackModel>& attacks,
                                        double threshold) {
  const auto i5 = bell::builtin_functional(bell::FunctionalKind::I5);
  const auto strat = bell::optimal_strategy(bell::FunctionalKind::I5);
  const DensityMatrix clean = DensityMatrix::from_pure(code5::logical_zero());

  std::vector<AttackOutcome> rows;
  rows.reserve(attacks.size());
  for (const AttackModel& attack : attacks) {
    const DensityMatrix attacked = apply_attack(clean, attack);
    AttackOutcome row;
    row.label = attack_label(attack);
    row.i5_value = bell::evaluate(i5, strat, attacked);
    row.certified = row.i5_value >= threshold;
    if (std::holds_alternative<PauliAttack>(attack)) {
      // The syndrome is a definite outcome for a Pauli-shifted code state, so
      // a fixed generator suffices for reproducibility.
      qsim::Rng rng(0);
      const auto rec = code5::measure_and_correct(attacked, rng);
      row.syndrome = rec.syndrome;
      row.corrected = qsim::fidelity(code5::logical_zero(), rec.state) > 1.0 - 1e-9;
      row.i5_after_correction = bell::evaluate(i5, strat, rec.state);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qgps::adversary
