#pragma once

#include "qgps/qsim/density_matrix.hpp"
#include "qgps/qsim/statevector.hpp"

namespace qgps::qsim {

// Squared-overlap convention: fidelity(a, b) = |<a|b>|^2 for pure states,
// <a|rho|a> for pure-vs-mixed, Uhlmann (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2
// for mixed-vs-mixed. Symmetric; 1 iff equal up to global phase.
double fidelity(const Statevector& a, const Statevector& b);
double fidelity(const Statevector& a, const DensityMatrix& b);
double fidelity(const DensityMatrix& a, const Statevector& b);
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qgps::qsim
