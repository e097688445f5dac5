#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qgps::qsim {

using cdouble = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;

inline constexpr int kMaxQubits = 10;

// Numerical tolerances for state/operator validation. Fixed here; tests that
// probe the validators pass explicit values instead.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kChannelTol = 1e-10;
inline constexpr double kDichotomicTol = 1e-10;

inline std::ptrdiff_t dim_of(int num_qubits) { return std::ptrdiff_t{1} << num_qubits; }

// Qubit 0 is the most significant bit of a basis index, so a ket written
// |b0 b1 ... b(n-1)> maps to the index with b0 first.
inline int bit_of(std::ptrdiff_t index, int qubit, int num_qubits) {
  return static_cast<int>((index >> (num_qubits - 1 - qubit)) & 1);
}

inline std::ptrdiff_t bit_mask(int qubit, int num_qubits) {
  return std::ptrdiff_t{1} << (num_qubits - 1 - qubit);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace qgps::qsim
