#pragma once

#include "qgps/qsim/density_matrix.hpp"
#include "qgps/qsim/observable.hpp"
#include "qgps/qsim/statevector.hpp"

namespace qgps::qsim {

// <P> via the basis action of the Pauli string, O(2^n).
double expectation(const Statevector& state, const PauliString& p);
double expectation(const DensityMatrix& dm, const PauliString& p);

// <M> for a dense Hermitian matrix (validated by the caller via Observable,
// or here when passed raw).
double expectation(const Statevector& state, const Mat& hermitian);
double expectation(const DensityMatrix& dm, const Mat& hermitian);

double expectation(const Statevector& state, const Observable& obs);
double expectation(const DensityMatrix& dm, const Observable& obs);

}  // namespace qgps::qsim
