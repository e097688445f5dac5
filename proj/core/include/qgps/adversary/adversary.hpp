#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgps/code5/code5.hpp"
#include "qgps/qsim/density_matrix.hpp"
#include "qgps/qsim/random.hpp"

namespace qgps::adversary {

using code5::PauliError;
using code5::Syndrome;
using qsim::DensityMatrix;

struct NoAttack {};

/// One Pauli fault per targeted qubit, applied coherently.
struct PauliAttack {
  std::vector<PauliError> errors;
};

/// With probability p, replace the targeted subset by its maximally mixed
/// state (the full register gives rho -> (1-p) rho + p I/2^n).
struct Depolarizing {
  double p = 0.0;
  std::vector<int> qubits;
};

/// Z-basis intercept-resend: total dephasing on each targeted qubit.
struct Dephasing {
  std::vector<int> qubits;
};

/// Source substitution; the broadcast state is ignored entirely.
struct StateReplacement {
  DensityMatrix state;
};

using AttackModel = std::variant<NoAttack, PauliAttack, Depolarizing, Dephasing,
                                 StateReplacement>;

std::string attack_label(const AttackModel& attack);

DensityMatrix apply_attack(const DensityMatrix& dm, const AttackModel& attack);

/// The 15 weight-1 Pauli attacks in (qubit, letter) order.
std::vector<AttackModel> single_pauli_attacks();

/// Product of per-party A0 eigenstates matching the best deterministic
/// assignment of the I5 functional: the strongest classical source a spoofer
/// could substitute for the code.
DensityMatrix best_classical_product_state();

struct AttackOutcome {
  std::string label;
  double i5_value;          // exact value under the optimal strategy
  bool certified;           // i5_value >= threshold
  std::optional<Syndrome> syndrome;   // present when correction was run
  bool corrected = false;   // correction restored the code state
  std::optional<double> i5_after_correction;
};

/// Exact outcomes of each attack on the encoded zero state. Correction is run
/// (deterministically) for Pauli attacks, where the syndrome is a definite
/// outcome; probabilistic attacks report the exact I5 only.
std::vector<AttackOutcome> attack_sweep(const std::vector<AttackModel>& attacks,
                                        double threshold);

struct DetectionEstimate {
  double probability;   // fraction of trials with estimate below threshold
  double wilson_low;    // 95% Wilson interval
  double wilson_high;
};

/// Monte Carlo detection frequency of finite-shot certification under the
/// attack. Reproducible for a fixed rng.
DetectionEstimate detection_probability(const AttackModel& attack, int shots_per_term,
                                        double threshold, int trials, qsim::Rng& rng);

}  // namespace qgps::adversary
