#include "qgps/code5/code5.hpp"

#include <cmath>

#include "qgps/qsim/expectation.hpp"

namespace qgps::code5 {

namespace {

struct AmplitudeTerm {
  const char* bits;
  int sign;
};

// 16-term expansions of the code-space basis states, coefficient magnitude 1/4.
constexpr AmplitudeTerm kZeroTerms[16] = {
    {"00000", +1}, {"10010", +1}, {"01001", +1}, {"10100", +1},
    {"01010", +1}, {"11011", -1}, {"00110", -1}, {"11000", -1},
    {"11101", -1}, {"00011", -1}, {"11110", -1}, {"01111", -1},
    {"10001", -1}, {"01100", -1}, {"10111", -1}, {"00101", +1},
};

constexpr AmplitudeTerm kOneTerms[16] = {
    {"11111", +1}, {"01101", +1}, {"10110", +1}, {"01011", +1},
    {"10101", +1}, {"00100", -1}, {"11001", -1}, {"00111", -1},
    {"00010", -1}, {"11100", -1}, {"00001", -1}, {"10000", -1},
    {"01110", -1}, {"10011", -1}, {"01000", -1}, {"11010", +1},
};

Statevector build_from_terms(const AmplitudeTerm (&terms)[16]) {
  qsim::Vec amp = qsim::Vec::Zero(32);
  for (const auto& t : terms) {
    std::ptrdiff_t idx = 0;
    for (int q = 0; q < 5; ++q)
      if (t.bits[q] == '1') idx |= qsim::bit_mask(q, 5);
    amp(idx) = t.sign * 0.25;
  }
  return Statevector(5, std::move(amp));
}

}  // namespace

const std::array<PauliString, kNumGenerators>& stabilizer_generators() {
  static const std::array<PauliString, kNumGenerators> gens = {
      PauliString("XZZXI"),
      PauliString("IXZZX"),
      PauliString("XIXZZ"),
      PauliString("ZXIXZ"),
  };
  return gens;
}

const Statevector& logical_zero() {
  static const Statevector zero = build_from_terms(kZeroTerms);
  return zero;
}

const Statevector& logical_one() {
  static const Statevector one = build_from_terms(kOneTerms);
  return one;
}

Statevector logical_state(qsim::cdouble alpha, qsim::cdouble beta) {
  qsim::require(std::abs(std::norm(alpha) + std::norm(beta) - 1.0) < 1e-10,
                "logical amplitudes are not normalized");
  qsim::Vec amp = alpha * logical_zero().amplitudes() + beta * logical_one().amplitudes();
  return Statevector(5, std::move(amp));
}

const Circuit& encoding_circuit() {
  static const Circuit circuit = [] {
    Circuit c(5);
    c.cnot(4, 3);
    c.h(3);
    c.h(1);
    c.cnot(3, 0);
    c.cnot(0, 4);
    c.cnot(1, 4);
    c.cnot(4, 2);
    c.h(3);
    c.h(2);
    c.cnot(3, 4);
    c.cnot(3, 2);
    c.cnot(2, 0);
    return c;
  }();
  return circuit;
}

const std::array<int, 4>& encoder_ancilla_bits() {
  static const std::array<int, 4> bits = {1, 0, 0, 1};
  return bits;
}

Statevector encoder_input(qsim::cdouble alpha, qsim::cdouble beta) {
  qsim::require(std::abs(std::norm(alpha) + std::norm(beta) - 1.0) < 1e-10,
                "data amplitudes are not normalized");
  const auto& anc = encoder_ancilla_bits();
  std::ptrdiff_t base = 0;
  for (int q = 0; q < 4; ++q)
    if (anc[q]) base |= qsim::bit_mask(q, 5);
  qsim::Vec amp = qsim::Vec::Zero(32);
  amp(base) = alpha;
  amp(base | qsim::bit_mask(4, 5)) = beta;
  return Statevector(5, std::move(amp));
}

const Circuit& variant_encoding_circuit() {
  static const Circuit circuit = [] {
    Circuit c(5);
    c.cnot(4, 0);
    c.h(0);
    c.h(1);
    c.cnot(1, 4);
    c.cnot(1, 2);
    c.cnot(0, 2);
    c.cnot(4, 3);
    c.cnot(0, 4);
    c.h(2);
    c.h(3);
    c.cnot(2, 4);
    c.cnot(3, 4);
    return c;
  }();
  return circuit;
}

const std::array<int, 4>& variant_ancilla_bits() {
  static const std::array<int, 4> bits = {0, 1, 1, 0};
  return bits;
}

std::array<double, 4> stabilizer_expectations(const Statevector& state) {
  qsim::require(state.num_qubits() == kNumQubits, "expected a 5-qubit state");
  std::array<double, 4> out{};
  for (int k = 0; k < kNumGenerators; ++k)
    out[k] = qsim::expectation(state, stabilizer_generators()[k]);
  return out;
}

std::array<double, 4> stabilizer_expectations(const DensityMatrix& dm) {
  qsim::require(dm.num_qubits() == kNumQubits, "expected a 5-qubit state");
  std::array<double, 4> out{};
  for (int k = 0; k < kNumGenerators; ++k)
    out[k] = qsim::expectation(dm, stabilizer_generators()[k]);
  return out;
}

}  // namespace qgps::code5
