#include <doctest.h>

#include <cmath>

#include "qgps/qsim/evolve.hpp"
#include "qgps/qsim/expectation.hpp"
#include "qgps/qsim/fidelity.hpp"
#include "qgps/qsim/sampling.hpp"

using namespace qgps::qsim;

namespace {

// Test-local dense oracle: plain kron products, independent of the library's
// bit-twiddled paths.
Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat pauli_on(int n, int qubit, char letter) {
  Mat m = Mat::Identity(1, 1);
  for (int q = 0; q < n; ++q)
    m = kron(m, q == qubit ? Mat(PauliString::letter_matrix(letter)) : Mat(Mat2::Identity()));
  return m;
}

Statevector random_state(int n, Rng& rng) {
  std::normal_distribution<double> gauss;
  Vec v(dim_of(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cdouble(gauss(rng), gauss(rng));
  v /= v.norm();
  return Statevector(n, std::move(v));
}

}  // namespace

TEST_CASE("statevector construction and validation") {
  Statevector zero(3);
  CHECK(zero.dim() == 8);
  CHECK(zero.amplitude(0) == cdouble(1, 0));

  CHECK_THROWS_AS(Statevector(2, Vec::Ones(4)), std::invalid_argument);   // not normalized
  CHECK_THROWS_AS(Statevector(2, Vec::Ones(3)), std::invalid_argument);   // wrong length
  CHECK(Statevector::basis_state(5, 18).amplitude(18) == cdouble(1, 0));  // |10010>
}

TEST_CASE("pauli string basis action matches dense matrices") {
  Rng rng(11);
  const std::string alphabet = "IXYZ";
  for (int trial = 0; trial < 20; ++trial) {
    std::string letters;
    for (int q = 0; q < 3; ++q) letters += alphabet[rng() % 4];
    const PauliString p(letters, rng() % 2 ? +1 : -1);
    const Statevector psi = random_state(3, rng);
    const double via_bits = expectation(psi, p);
    const double via_dense = expectation(psi, Mat(p.to_matrix()));
    CHECK(via_bits == doctest::Approx(via_dense).epsilon(1e-12));
  }
}

TEST_CASE("pauli commutation") {
  CHECK(PauliString("XX").commutes_with(PauliString("XX")));
  CHECK_FALSE(PauliString("XI").commutes_with(PauliString("ZI")));
  CHECK(PauliString("XZ").commutes_with(PauliString("ZX")));  // two anticommuting slots
}

TEST_CASE("empty circuit is the identity") {
  Rng rng(3);
  const Statevector psi = random_state(4, rng);
  const Statevector out = apply_circuit(psi, Circuit(4));
  CHECK((out.amplitudes() - psi.amplitudes()).norm() == doctest::Approx(0.0));
}

TEST_CASE("H then CNOT builds the Bell pair") {
  Circuit c(2);
  c.h(0).cnot(0, 1);
  const Statevector out = apply_circuit(Statevector(2), c);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(out.amplitude(0) - s) < 1e-15);
  CHECK(std::abs(out.amplitude(3) - s) < 1e-15);
  CHECK(std::abs(out.amplitude(1)) < 1e-15);
  CHECK(std::abs(out.amplitude(2)) < 1e-15);
}

TEST_CASE("norm preserved across random built-in circuits") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c(4);
    for (int g = 0; g < 50; ++g) {
      switch (rng() % 5) {
        case 0: c.h(rng() % 4); break;
        case 1: c.x(rng() % 4); break;
        case 2: c.y(rng() % 4); break;
        case 3: c.z(rng() % 4); break;
        default: {
          int a = rng() % 4, b = rng() % 4;
          if (a == b) b = (b + 1) % 4;
          c.cnot(a, b);
        }
      }
    }
    const Statevector out = apply_circuit(random_state(4, rng), c);
    CHECK(std::abs(out.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("circuit and gate validation") {
  Circuit c(2);
  CHECK_THROWS_AS(c.h(2), std::invalid_argument);
  CHECK_THROWS_AS(Gate::cnot(1, 1), std::invalid_argument);
  Mat2 not_unitary;
  not_unitary << 1, 1, 0, 1;
  CHECK_THROWS_AS(Gate::unitary(0, not_unitary), std::invalid_argument);

  const Statevector psi(3);
  CHECK_THROWS_AS(apply_circuit(psi, Circuit(2)), std::invalid_argument);
}

TEST_CASE("expectation basics") {
  CHECK(expectation(Statevector(1), PauliString("Z")) == doctest::Approx(1.0));
  CHECK(expectation(DensityMatrix::maximally_mixed(3), PauliString("XZY")) ==
        doctest::Approx(0.0));

  Mat bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(expectation(Statevector(1), bad), std::invalid_argument);
}

TEST_CASE("identity channel leaves the state alone") {
  Rng rng(5);
  const DensityMatrix dm = DensityMatrix::from_pure(random_state(2, rng));
  const DensityMatrix out = apply_channel(dm, KrausChannel::identity(1));
  CHECK((out.entries() - dm.entries()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("full depolarizing leaves the maximally mixed marginal") {
  Rng rng(7);
  const DensityMatrix dm = DensityMatrix::from_pure(random_state(2, rng));
  const DensityMatrix out = apply_channel(dm, KrausChannel::depolarizing(1.0, 0));
  const DensityMatrix marginal = out.partial_trace_keep({0});
  CHECK((marginal.entries() - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  // The other marginal is untouched.
  const DensityMatrix other = out.partial_trace_keep({1});
  const DensityMatrix other_before = dm.partial_trace_keep({1});
  CHECK((other.entries() - other_before.entries()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("depolarizing on one qubit of a 5-qubit state matches the dense oracle") {
  // Build a fixed entangled 5-qubit state, depolarize qubit 1, and compare
  // against explicit Kraus algebra on dense matrices.
  Rng rng(23);
  const Statevector psi = random_state(5, rng);
  const DensityMatrix rho = DensityMatrix::from_pure(psi);
  const double p = 0.1;

  const DensityMatrix out = apply_channel(rho, KrausChannel::depolarizing(p, 1));

  Mat expected = (1.0 - 0.75 * p) * rho.entries();
  for (char letter : {'X', 'Y', 'Z'}) {
    const Mat full = pauli_on(5, 1, letter);
    expected += 0.25 * p * full * rho.entries() * full.adjoint();
  }
  CHECK((out.entries() - expected).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(out.trace() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(out.is_positive_semidefinite());

  // Fidelity to the input drops by 3p/4 times the erased coherence.
  const double fid = fidelity(psi, out);
  double oracle = (1.0 - 0.75 * p);
  for (char letter : {'X', 'Y', 'Z'}) {
    const Mat full = pauli_on(5, 1, letter);
    const cdouble amp = psi.amplitudes().dot(full * psi.amplitudes());
    oracle += 0.25 * p * std::norm(amp);
  }
  CHECK(fid == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("incomplete Kraus sets are rejected") {
  std::vector<Mat> half = {0.5 * Mat::Identity(2, 2)};
  CHECK_THROWS_AS(KrausChannel(half, {0}), std::invalid_argument);
}

TEST_CASE("channel preserves trace and positivity") {
  Rng rng(29);
  const DensityMatrix dm = DensityMatrix::from_pure(random_state(3, rng));
  for (const auto& ch : {KrausChannel::depolarizing(0.3, 2), KrausChannel::dephasing(0),
                         KrausChannel::uniform_pauli(0.2, {1, 2})}) {
    const DensityMatrix out = apply_channel(dm, ch);
    CHECK(out.trace() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(out.is_positive_semidefinite());
  }
}

TEST_CASE("sampling: eigenstates give deterministic outcomes") {
  Rng rng(31);
  const auto z = PauliString::letter_matrix('Z');
  const auto outcomes =
      sample_product_outcomes(Statevector(1), {{0, z}}, 200, rng);
  for (const auto& row : outcomes) CHECK(row[0] == +1);
}

TEST_CASE("sampling: perfect ZZ correlation on the Bell pair") {
  Circuit c(2);
  c.h(0).cnot(0, 1);
  const Statevector bell = apply_circuit(Statevector(2), c);
  const auto z = PauliString::letter_matrix('Z');
  Rng rng(37);
  const auto outcomes = sample_product_outcomes(bell, {{0, z}, {1, z}}, 500, rng);
  for (const auto& row : outcomes) CHECK(row[0] * row[1] == +1);
}

TEST_CASE("sampling soundness: mean within 5 sigma of the exact expectation") {
  const double theta = 0.7;
  Vec amp(2);
  amp << std::cos(theta), std::sin(theta);
  const Statevector psi(1, std::move(amp));
  const double exact = std::cos(2 * theta);  // <Z>

  const int shots = 100000;
  Rng rng(41);
  const auto z = PauliString::letter_matrix('Z');
  const auto outcomes = sample_product_outcomes(psi, {{0, z}}, shots, rng);
  double mean = 0;
  for (const auto& row : outcomes) mean += row[0];
  mean /= shots;
  CHECK(std::abs(mean - exact) < 5.0 / std::sqrt(static_cast<double>(shots)));
}

TEST_CASE("sampling reproducibility and validation") {
  Rng a(99), b(99);
  const auto x = PauliString::letter_matrix('X');
  const Statevector psi(2);
  CHECK(sample_product_outcomes(psi, {{0, x}, {1, x}}, 50, a) ==
        sample_product_outcomes(psi, {{0, x}, {1, x}}, 50, b));

  Mat2 not_dichotomic = 0.5 * Mat2(PauliString::letter_matrix('X'));
  CHECK_THROWS_AS(sample_product_outcomes(psi, {{0, not_dichotomic}}, 1, a),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_product_outcomes(psi, {{0, x}, {0, x}}, 1, a),
                  std::invalid_argument);
}

TEST_CASE("fidelity conventions") {
  Rng rng(43);
  const Statevector a = random_state(3, rng);
  const Statevector b = random_state(3, rng);

  CHECK(fidelity(a, a) == doctest::Approx(1.0));
  CHECK(fidelity(a, b) == doctest::Approx(fidelity(b, a)));

  // Global phase is irrelevant.
  const Statevector rotated(3, a.amplitudes() * std::polar(1.0, 1.234));
  CHECK(fidelity(a, rotated) == doctest::Approx(1.0));

  // Pure-vs-mixed agrees with Uhlmann on pure inputs.
  const DensityMatrix da = DensityMatrix::from_pure(a);
  const DensityMatrix db = DensityMatrix::from_pure(b);
  CHECK(fidelity(da, db) == doctest::Approx(fidelity(a, b)).epsilon(1e-9));

  // Mixing with white noise: F = (1-p) + p/32.
  const double p = 0.1;
  const Statevector psi = random_state(5, rng);
  Mat mixed = (1 - p) * (psi.amplitudes() * psi.amplitudes().adjoint()) +
              p * Mat::Identity(32, 32) / 32.0;
  CHECK(fidelity(psi, DensityMatrix(5, std::move(mixed))) ==
        doctest::Approx(0.903125).epsilon(1e-12));

  CHECK_THROWS_AS(fidelity(Statevector(2), Statevector(3)), std::invalid_argument);
}

TEST_CASE("density matrix validation") {
  Mat not_herm(2, 2);
  not_herm << 1, 1, 0, 0;
  CHECK_THROWS_AS(DensityMatrix(1, not_herm), std::invalid_argument);

  Mat wrong_trace = 2.0 * Mat::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(1, wrong_trace), std::invalid_argument);

  CHECK(DensityMatrix::maximally_mixed(2).min_eigenvalue() == doctest::Approx(0.25));
}

TEST_CASE("partial trace of the Bell pair is maximally mixed") {
  Circuit c(2);
  c.h(0).cnot(0, 1);
  const DensityMatrix rho = DensityMatrix::from_pure(apply_circuit(Statevector(2), c));
  for (int keep : {0, 1}) {
    const DensityMatrix marginal = rho.partial_trace_keep({keep});
    CHECK((marginal.entries() - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  }
}
