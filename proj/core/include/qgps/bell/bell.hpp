#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qgps/qsim/density_matrix.hpp"
#include "qgps/qsim/random.hpp"
#include "qgps/qsim/statevector.hpp"

namespace qgps::bell {

using qsim::cdouble;
using qsim::DensityMatrix;
using qsim::Mat;
using qsim::Mat2;
using qsim::Statevector;

/// A two-outcome single-qubit observable: Hermitian with O^2 = I, so its
/// eigenvalues are +-1.
class DichotomicObservable {
 public:
  explicit DichotomicObservable(Mat2 matrix);

  const Mat2& matrix() const { return matrix_; }

 private:
  Mat2 matrix_;
};

/// Observable with unit Bloch vector cos(theta) X + sin(theta)(cos(phi) Y +
/// sin(phi) Z); covers every traceless dichotomic 2x2 observable.
DichotomicObservable random_dichotomic(qsim::Rng& rng);

/// -i [a0, a1] / 2. Requires the inputs to anticommute; the result is
/// dichotomic and anticommutes with both.
DichotomicObservable induced_third_observable(const DichotomicObservable& a0,
                                              const DichotomicObservable& a1);

/// Per-party measurement settings; party j measures qubit j.
class MeasurementStrategy {
 public:
  MeasurementStrategy(std::vector<std::array<DichotomicObservable, 2>> settings);

  int parties() const { return static_cast<int>(settings_.size()); }
  const DichotomicObservable& setting(int party, int index) const {
    return settings_.at(party)[index];
  }

  /// Conjugate every observable by a per-party unitary: O -> V O V^dag.
  MeasurementStrategy conjugated(const std::vector<Mat2>& unitaries) const;

 private:
  std::vector<std::array<DichotomicObservable, 2>> settings_;
};

/// One product of per-party settings; slot values 0/1 pick the party's
/// setting, kIdentitySlot leaves the party out.
struct CorrelatorTerm {
  static constexpr int kIdentitySlot = -1;

  double coefficient;
  std::vector<int> slots;  // one per party

  int active_parties() const;
};

enum class FunctionalKind { Chsh, I5 };

/// A linear combination of correlators with its deterministic (classical) and
/// quantum bounds.
struct BellFunctional {
  int parties;
  std::vector<CorrelatorTerm> terms;
  double classical_bound;
  double quantum_bound;
};

BellFunctional builtin_functional(FunctionalKind kind);

/// Exact value sum_terms c * <prod of chosen observables> on the given state.
double evaluate(const BellFunctional& f, const MeasurementStrategy& strat,
                const Statevector& state);
double evaluate(const BellFunctional& f, const MeasurementStrategy& strat,
                const DensityMatrix& dm);

/// Deterministic assignment of +-1 to every setting of every party.
using DeterministicAssignment = std::vector<std::array<int, 2>>;

struct ClassicalMaximum {
  double value;
  DeterministicAssignment assignment;
};

/// Exact maximum over all 4^parties deterministic +-1 assignments.
ClassicalMaximum classical_maximum(const BellFunctional& f);

MeasurementStrategy optimal_strategy(FunctionalKind kind);

/// Dense 32x32 operators of the four strategy-dependent stabilizer
/// surrogates; under the optimal strategy they coincide with the code
/// generators.
std::array<Mat, 4> pseudo_stabilizers(const MeasurementStrategy& strat);

/// Frobenius norm of [bound*I - functional operator] minus the weighted
/// sum-of-squares decomposition. Vanishes for every dichotomic strategy.
double sos_residual(const MeasurementStrategy& strat, FunctionalKind kind);

struct SampleEstimate {
  double estimate;
  double stderr;
};

/// Finite-shot estimator: each correlator gets its own shot batch, the total
/// standard error is sqrt(sum c^2 var / N). Reproducible for a fixed rng.
SampleEstimate sample_estimate(const BellFunctional& f, const MeasurementStrategy& strat,
                               const Statevector& state, int shots_per_term, qsim::Rng& rng);
SampleEstimate sample_estimate(const BellFunctional& f, const MeasurementStrategy& strat,
                               const DensityMatrix& dm, int shots_per_term, qsim::Rng& rng);

}  // namespace qgps::bell
