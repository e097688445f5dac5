#pragma once

#include <array>
#include <optional>

#include "qgps/qsim/circuit.hpp"
#include "qgps/qsim/density_matrix.hpp"
#include "qgps/qsim/pauli.hpp"
#include "qgps/qsim/random.hpp"
#include "qgps/qsim/statevector.hpp"

namespace qgps::code5 {

using qsim::Circuit;
using qsim::DensityMatrix;
using qsim::PauliString;
using qsim::Statevector;

inline constexpr int kNumQubits = 5;
inline constexpr int kNumGenerators = 4;

/// The four commuting generators XZZXI, IXZZX, XIXZZ, ZXIXZ (qubit 0 first).
const std::array<PauliString, kNumGenerators>& stabilizer_generators();

/// The two orthonormal code-space basis states, 16 amplitudes of +-1/4 each.
const Statevector& logical_zero();
const Statevector& logical_one();

/// alpha |0_L> + beta |1_L>, built from the amplitude tables (not the circuit).
/// Requires |alpha|^2 + |beta|^2 = 1 within 1e-10.
Statevector logical_state(qsim::cdouble alpha, qsim::cdouble beta);

/// Encoder with exactly 4 Hadamard and 8 CNOT gates. Acting on
/// encoder_input(alpha, beta) it produces logical_state(alpha, beta) up to one
/// global phase shared by all inputs.
const Circuit& encoding_circuit();

/// Ancilla basis bits the encoder expects on qubits 0..3 (data on qubit 4).
const std::array<int, 4>& encoder_ancilla_bits();

/// The encoder's input register: ancillas on qubits 0..3, data qubit 4
/// carrying alpha|0> + beta|1>.
Statevector encoder_input(qsim::cdouble alpha, qsim::cdouble beta);

/// A related 4H+8CNOT layout kept for comparison. With ancilla register
/// |0110> it prepares the code space only up to a residual Z on qubit 4;
/// see the tests for the exact frame relation.
const Circuit& variant_encoding_circuit();
const std::array<int, 4>& variant_ancilla_bits();

/// A single-qubit X, Y or Z fault on one of the five wires.
struct PauliError {
  int qubit;    // 0..4
  char letter;  // 'X', 'Y' or 'Z'

  bool operator==(const PauliError&) const = default;
};

PauliString to_pauli_string(const PauliError& err);

/// Anticommutation pattern against the four generators; bits[k] = 1 iff the
/// operator anticommutes with generator k.
struct Syndrome {
  std::array<int, 4> bits{};

  int index() const { return bits[0] << 3 | bits[1] << 2 | bits[2] << 1 | bits[3]; }
  bool is_trivial() const { return index() == 0; }
  bool operator==(const Syndrome&) const = default;
};

Syndrome syndrome_of_error(const PauliError& err);

/// Unique single-qubit error with the given syndrome; nullopt for the trivial
/// syndrome. The 15 errors and 15 nonzero syndromes are in bijection.
std::optional<PauliError> decode_syndrome(const Syndrome& syn);

std::array<double, 4> stabilizer_expectations(const Statevector& state);
std::array<double, 4> stabilizer_expectations(const DensityMatrix& dm);

struct CorrectionResult {
  DensityMatrix state;
  Syndrome syndrome;
  std::optional<PauliError> correction;
};

/// Projectively measures the four generators in sequence, decodes the
/// syndrome and applies the (weight-1) correction. Weight-2 faults decode to
/// the wrong correction by design of a distance-3 code; the record exposes
/// the resulting state for the caller to judge.
CorrectionResult measure_and_correct(const DensityMatrix& dm, qsim::Rng& rng);

}  // namespace qgps::code5
