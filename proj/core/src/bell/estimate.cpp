#include <cmath>

#include "qgps/bell/bell.hpp"
#include "qgps/qsim/sampling.hpp"

namespace qgps::bell {

namespace {

std::vector<qsim::SingleQubitObservable> term_observables(const CorrelatorTerm& term,
                                                          const MeasurementStrategy& strat) {
  std::vector<qsim::SingleQubitObservable> obs;
  for (int j = 0; j < static_cast<int>(term.slots.size()); ++j)
    if (term.slots[j] != CorrelatorTerm::kIdentitySlot)
      obs.push_back({j, strat.setting(j, term.slots[j]).matrix()});
  return obs;
}

template <typename State>
SampleEstimate estimate_impl(const BellFunctional& f, const MeasurementStrategy& strat,
                             const State& state, int shots_per_term, qsim::Rng& rng) {
  qsim::require(shots_per_term >= 1, "shots_per_term must be >= 1");
  qsim::require(strat.parties() == f.parties, "strategy party count mismatch");
  double estimate = 0.0;
  double variance = 0.0;
  for (const CorrelatorTerm& term : f.terms) {
    const auto obs = term_observables(term, strat);
    const auto outcomes = qsim::sample_product_outcomes(state, obs, shots_per_term, rng);
    double mean = 0.0;
    for (const auto& row : outcomes) {
      int prod = 1;
      for (int o : row) prod *= o;
      mean += prod;
    }
    mean /= shots_per_term;
    estimate += term.coefficient * mean;
    // Population variance of a +-1 product: 1 - mean^2.
    variance += term.coefficient * term.coefficient * (1.0 - mean * mean) / shots_per_term;
  }
  return {estimate, std::sqrt(std::max(variance, 0.0))};
}

}  // namespace

SampleEstimate sample_estimate(const BellFunctional& f, const MeasurementStrategy& strat,
                               const Statevector& state, int shots_per_term, qsim::Rng& rng) {
  return estimate_impl(f, strat, state, shots_per_term, rng);
}

SampleEstimate sample_estimate(const BellFunctional& f, const MeasurementStrategy& strat,
                               const DensityMatrix& dm, int shots_per_term, qsim::Rng& rng) {
  return estimate_impl(f, strat, dm, shots_per_term, rng);
}

}  // namespace qgps::bell
