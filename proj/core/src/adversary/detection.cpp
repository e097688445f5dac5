#include <cmath>

#include "qgps/adversary/adversary.hpp"
#include "qgps/bell/bell.hpp"

namespace qgps::adversary {

DetectionEstimate detection_probability(const AttackModel& attack, int shots_per_term,
                                        double threshold, int trials, qsim::Rng& rng) {
  qsim::require(trials >= 1, "trials must be >= 1");
  const auto i5 = bell::builtin_functional(bell::FunctionalKind::I5);
  const auto strat = bell::optimal_strategy(bell::FunctionalKind::I5);
  const DensityMatrix attacked =
      apply_attack(DensityMatrix::from_pure(code5::logical_zero()), attack);

  int detections = 0;
  for (int t = 0; t < trials; ++t) {
    qsim::Rng trial_rng(qsim::derive_seed(rng(), t));
    const auto est = bell::sample_estimate(i5, strat, attacked, shots_per_term, trial_rng);
    if (est.estimate < threshold) ++detections;
  }

  const double n = trials;
  const double phat = detections / n;
  const double z = 1.959963984540054;  // 95% two-sided
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {phat, std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace qgps::adversary
