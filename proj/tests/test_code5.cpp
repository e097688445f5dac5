#include <doctest.h>

#include <cmath>
#include <set>

#include "qgps/code5/code5.hpp"
#include "qgps/qsim/evolve.hpp"
#include "qgps/qsim/expectation.hpp"
#include "qgps/qsim/fidelity.hpp"

using namespace qgps;
using namespace qgps::code5;

namespace {

std::pair<qsim::cdouble, qsim::cdouble> random_amplitudes(qsim::Rng& rng) {
  std::normal_distribution<double> gauss;
  qsim::cdouble a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

}  // namespace

TEST_CASE("generators commute and square to identity") {
  const auto& gens = stabilizer_generators();
  REQUIRE(gens.size() == 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(gens[i].commutes_with(gens[j]));
    const qsim::Mat sq = gens[i].to_matrix() * gens[i].to_matrix();
    CHECK((sq - qsim::Mat::Identity(32, 32)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("logical basis states live in the code space") {
  for (const auto* state : {&logical_zero(), &logical_one()}) {
    CHECK(std::abs(state->norm() - 1.0) < 1e-15);
    for (const auto& gen : stabilizer_generators()) {
      // Eigenvector check, stronger than the expectation alone.
      const qsim::Vec image = gen.to_matrix() * state->amplitudes();
      CHECK((image - state->amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  CHECK(std::abs(logical_zero().amplitudes().dot(logical_one().amplitudes())) < 1e-15);
}

TEST_CASE("amplitude tables: spot values") {
  // |00000> -> index 0, |11011> -> 27, |10010> -> 18.
  CHECK(logical_zero().amplitude(0) == qsim::cdouble(0.25, 0));
  CHECK(logical_zero().amplitude(18) == qsim::cdouble(0.25, 0));
  CHECK(logical_zero().amplitude(27) == qsim::cdouble(-0.25, 0));
  // |11111> -> 31, |01101> -> 13, |00100> -> 4.
  CHECK(logical_one().amplitude(31) == qsim::cdouble(0.25, 0));
  CHECK(logical_one().amplitude(13) == qsim::cdouble(0.25, 0));
  CHECK(logical_one().amplitude(4) == qsim::cdouble(-0.25, 0));
}

TEST_CASE("logical_state builds normalized code states") {
  const auto zero = logical_state(1.0, 0.0);
  CHECK((zero.amplitudes() - logical_zero().amplitudes()).norm() < 1e-15);
  const auto one = logical_state(0.0, 1.0);
  CHECK((one.amplitudes() - logical_one().amplitudes()).norm() < 1e-15);

  const double s = 1.0 / std::sqrt(2.0);
  const auto plus = logical_state(s, s);
  CHECK(std::abs(plus.norm() - 1.0) < 1e-12);
  for (double e : stabilizer_expectations(plus)) CHECK(e == doctest::Approx(1.0));

  CHECK_THROWS_AS(logical_state(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("encoding circuit census and action") {
  const auto& circuit = encoding_circuit();
  int h = 0, cx = 0;
  for (const auto& g : circuit.gates()) {
    if (g.kind() == qsim::GateKind::Hadamard) ++h;
    if (g.kind() == qsim::GateKind::Cnot) ++cx;
  }
  CHECK(h == 4);
  CHECK(cx == 8);
  CHECK(circuit.size() == 12);

  // psi = |0> encodes to |0_L>.
  const auto out0 = qsim::apply_circuit(encoder_input(1.0, 0.0), circuit);
  CHECK(qsim::fidelity(out0, logical_zero()) == doctest::Approx(1.0).epsilon(1e-12));

  // psi = (|0>+|1>)/sqrt2 encodes to (|0_L>+|1_L>)/sqrt2.
  const double s = 1.0 / std::sqrt(2.0);
  const auto outp = qsim::apply_circuit(encoder_input(s, s), circuit);
  CHECK(qsim::fidelity(outp, logical_state(s, s)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("encoder matches the amplitude tables with one global phase") {
  qsim::Rng rng(2024);
  qsim::cdouble phase(0, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [a, b] = random_amplitudes(rng);
    const auto encoded = qsim::apply_circuit(encoder_input(a, b), encoding_circuit());
    const auto target = logical_state(a, b);
    CHECK(qsim::fidelity(encoded, target) >= 1.0 - 1e-10);
    const qsim::cdouble ov = target.amplitudes().dot(encoded.amplitudes());
    if (trial == 0)
      phase = ov / std::abs(ov);
    else
      CHECK(std::abs(ov / std::abs(ov) - phase) < 1e-9);
  }
}

TEST_CASE("variant layout prepares the code space up to a Z frame on qubit 4") {
  const auto& circuit = variant_encoding_circuit();
  int h = 0, cx = 0;
  for (const auto& g : circuit.gates()) {
    if (g.kind() == qsim::GateKind::Hadamard) ++h;
    if (g.kind() == qsim::GateKind::Cnot) ++cx;
  }
  CHECK(h == 4);
  CHECK(cx == 8);

  qsim::Rng rng(77);
  const auto& anc = variant_ancilla_bits();
  for (int trial = 0; trial < 5; ++trial) {
    const auto [a, b] = random_amplitudes(rng);
    std::ptrdiff_t base = 0;
    for (int q = 0; q < 4; ++q)
      if (anc[q]) base |= qsim::bit_mask(q, 5);
    qsim::Vec amp = qsim::Vec::Zero(32);
    amp(base) = a;
    amp(base | qsim::bit_mask(4, 5)) = b;
    auto out = qsim::apply_circuit(qsim::Statevector(5, std::move(amp)), circuit);
    // Without the frame fix the overlap vanishes...
    CHECK(qsim::fidelity(out, logical_state(a, b)) < 1e-12);
    // ...and a trailing Z on qubit 4 restores it exactly.
    Circuit fix(5);
    fix.z(4);
    out = qsim::apply_circuit(out, fix);
    CHECK(qsim::fidelity(out, logical_state(a, b)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("syndromes of named single-qubit errors") {
  CHECK(syndrome_of_error({0, 'X'}) == Syndrome{{0, 0, 0, 1}});
  CHECK(syndrome_of_error({2, 'Z'}) == Syndrome{{0, 0, 1, 0}});
  CHECK(syndrome_of_error({4, 'Z'}) == Syndrome{{0, 1, 0, 0}});
}

TEST_CASE("syndrome map is a bijection over the 15 single-qubit errors") {
  std::set<int> seen;
  for (int q = 0; q < 5; ++q)
    for (char letter : {'X', 'Y', 'Z'}) {
      const PauliError err{q, letter};
      const Syndrome syn = syndrome_of_error(err);
      CHECK(!syn.is_trivial());
      CHECK(seen.insert(syn.index()).second);  // injective
      const auto decoded = decode_syndrome(syn);
      REQUIRE(decoded.has_value());
      CHECK(*decoded == err);  // decode o syndrome = identity
    }
  CHECK(seen.size() == 15);
  CHECK_FALSE(decode_syndrome(Syndrome{}).has_value());
}

TEST_CASE("stabilizer expectations flag single-qubit errors") {
  for (double e : stabilizer_expectations(logical_zero()))
    CHECK(e == doctest::Approx(1.0).epsilon(1e-12));

  // X on qubit 0 anticommutes with the fourth generator only.
  qsim::Vec flipped = PauliString("XIIII").to_matrix() * logical_zero().amplitudes();
  const auto exps = stabilizer_expectations(qsim::Statevector(5, std::move(flipped)));
  CHECK(exps[0] == doctest::Approx(1.0));
  CHECK(exps[1] == doctest::Approx(1.0));
  CHECK(exps[2] == doctest::Approx(1.0));
  CHECK(exps[3] == doctest::Approx(-1.0));

  const auto mixed = stabilizer_expectations(qsim::DensityMatrix::maximally_mixed(5));
  for (double e : mixed) CHECK(e == doctest::Approx(0.0));
}

TEST_CASE("measure_and_correct: clean state passes through") {
  qsim::Rng rng(1);
  const auto rec =
      measure_and_correct(qsim::DensityMatrix::from_pure(logical_zero()), rng);
  CHECK(rec.syndrome.is_trivial());
  CHECK_FALSE(rec.correction.has_value());
  CHECK(qsim::fidelity(logical_zero(), rec.state) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("measure_and_correct repairs every single-qubit error") {
  qsim::Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [a, b] = random_amplitudes(rng);
    const auto psi = logical_state(a, b);
    for (int q = 0; q < 5; ++q)
      for (char letter : {'X', 'Y', 'Z'}) {
        qsim::Vec corrupted = to_pauli_string({q, letter}).to_matrix() * psi.amplitudes();
        const auto rec = measure_and_correct(
            qsim::DensityMatrix::from_pure(qsim::Statevector(5, std::move(corrupted))), rng);
        CHECK(rec.syndrome == syndrome_of_error({q, letter}));
        REQUIRE(rec.correction.has_value());
        CHECK(*rec.correction == PauliError{q, letter});
        CHECK(qsim::fidelity(psi, rec.state) == doctest::Approx(1.0).epsilon(1e-10));
      }
  }
}

TEST_CASE("weight-2 faults miscorrect, as a distance-3 code must") {
  qsim::Rng rng(3);
  qsim::Vec corrupted = PauliString("XXIII").to_matrix() * logical_zero().amplitudes();
  const auto rec = measure_and_correct(
      qsim::DensityMatrix::from_pure(qsim::Statevector(5, std::move(corrupted))), rng);
  CHECK(!rec.syndrome.is_trivial());
  CHECK(qsim::fidelity(logical_zero(), rec.state) < 0.999);
}
