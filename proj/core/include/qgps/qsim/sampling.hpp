#pragma once

#include <vector>

#include "qgps/qsim/density_matrix.hpp"
#include "qgps/qsim/random.hpp"
#include "qgps/qsim/statevector.hpp"

namespace qgps::qsim {

/// One party's two-outcome measurement: a dichotomic (O^2 = I) single-qubit
/// observable attached to its wire.
struct SingleQubitObservable {
  int qubit;
  Mat2 matrix;
};

/// Samples joint +-1 outcomes of simultaneously measured dichotomic
/// observables on disjoint qubits. outcomes[shot][party] in {-1,+1}.
/// Reproducible for a fixed rng state.
std::vector<std::vector<int>> sample_product_outcomes(
    const Statevector& state, const std::vector<SingleQubitObservable>& observables,
    int shots, Rng& rng);

std::vector<std::vector<int>> sample_product_outcomes(
    const DensityMatrix& dm, const std::vector<SingleQubitObservable>& observables,
    int shots, Rng& rng);

}  // namespace qgps::qsim
