#include <doctest.h>

#include <cmath>

#include "qgps/bell/bell.hpp"
#include "qgps/code5/code5.hpp"
#include "qgps/qsim/evolve.hpp"
#include "qgps/qsim/pauli.hpp"

using namespace qgps;
using namespace qgps::bell;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kI5Max = 4.0 * kSqrt2 + 1.0;

Statevector bell_pair() {
  qsim::Circuit c(2);
  c.h(0).cnot(0, 1);
  return qsim::apply_circuit(Statevector(2), c);
}

Statevector random_state(int n, qsim::Rng& rng) {
  std::normal_distribution<double> gauss;
  qsim::Vec v(qsim::dim_of(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cdouble(gauss(rng), gauss(rng));
  v /= v.norm();
  return Statevector(n, std::move(v));
}

MeasurementStrategy random_strategy(int parties, qsim::Rng& rng) {
  std::vector<std::array<DichotomicObservable, 2>> settings;
  for (int j = 0; j < parties; ++j)
    settings.push_back({random_dichotomic(rng), random_dichotomic(rng)});
  return MeasurementStrategy(std::move(settings));
}

std::pair<cdouble, cdouble> random_amplitudes(qsim::Rng& rng) {
  std::normal_distribution<double> gauss;
  cdouble a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

}  // namespace

TEST_CASE("builtin functionals carry the right shape and bounds") {
  const auto chsh = builtin_functional(FunctionalKind::Chsh);
  CHECK(chsh.terms.size() == 4);
  CHECK(chsh.classical_bound == 2.0);
  CHECK(chsh.quantum_bound == doctest::Approx(2.0 * kSqrt2).epsilon(1e-15));

  const auto i5 = builtin_functional(FunctionalKind::I5);
  CHECK(i5.terms.size() == 7);
  CHECK(i5.classical_bound == 5.0);
  CHECK(i5.quantum_bound == doctest::Approx(kI5Max).epsilon(1e-15));
  double sum_c = 0, sum_abs = 0;
  for (const auto& t : i5.terms) {
    sum_c += t.coefficient;
    sum_abs += std::abs(t.coefficient);
  }
  CHECK(sum_c == doctest::Approx(5.0));   // +1*5 +2 -2
  CHECK(sum_abs == doctest::Approx(9.0));
}

TEST_CASE("classical maxima by brute force") {
  CHECK(classical_maximum(builtin_functional(FunctionalKind::Chsh)).value == 2.0);
  CHECK(classical_maximum(builtin_functional(FunctionalKind::I5)).value == 5.0);

  // A single term always reaches |coefficient|.
  BellFunctional single{2, {{-3.0, {0, 1}}}, 3.0, 3.0};
  CHECK(classical_maximum(single).value == 3.0);

  BellFunctional too_big{7, {}, 0, 0};
  CHECK_THROWS_AS(classical_maximum(too_big), std::invalid_argument);
}

TEST_CASE("argmax assignment reproduces the bound") {
  const auto f = builtin_functional(FunctionalKind::I5);
  const auto best = classical_maximum(f);
  double value = 0;
  for (const auto& term : f.terms) {
    double prod = term.coefficient;
    for (int j = 0; j < f.parties; ++j)
      if (term.slots[j] != CorrelatorTerm::kIdentitySlot)
        prod *= best.assignment[j][term.slots[j]];
    value += prod;
  }
  CHECK(value == best.value);
}

TEST_CASE("CHSH saturates Tsirelson on the Bell pair") {
  const auto chsh = builtin_functional(FunctionalKind::Chsh);
  const auto strat = optimal_strategy(FunctionalKind::Chsh);
  CHECK(evaluate(chsh, strat, bell_pair()) ==
        doctest::Approx(2.0 * kSqrt2).epsilon(1e-12));
}

TEST_CASE("I5 saturates on the whole logical subspace") {
  const auto i5 = builtin_functional(FunctionalKind::I5);
  const auto strat = optimal_strategy(FunctionalKind::I5);

  CHECK(evaluate(i5, strat, code5::logical_zero()) == doctest::Approx(kI5Max).epsilon(1e-12));
  CHECK(evaluate(i5, strat, code5::logical_one()) == doctest::Approx(kI5Max).epsilon(1e-12));

  qsim::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [a, b] = random_amplitudes(rng);
    CHECK(std::abs(evaluate(i5, strat, code5::logical_state(a, b)) - kI5Max) < 1e-10);
  }

  CHECK(evaluate(i5, strat, qsim::DensityMatrix::maximally_mixed(5)) ==
        doctest::Approx(0.0));
}

TEST_CASE("pseudo-stabilizers reduce to the code generators under the optimal strategy") {
  const auto ps = pseudo_stabilizers(optimal_strategy(FunctionalKind::I5));
  const auto& gens = code5::stabilizer_generators();
  for (int k = 0; k < 4; ++k)
    CHECK((ps[k] - gens[k].to_matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("sum-of-squares identity holds for every dichotomic strategy") {
  CHECK(sos_residual(optimal_strategy(FunctionalKind::I5), FunctionalKind::I5) < 1e-10);
  CHECK(sos_residual(optimal_strategy(FunctionalKind::Chsh), FunctionalKind::Chsh) < 1e-10);

  qsim::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(sos_residual(random_strategy(5, rng), FunctionalKind::I5) < 1e-10);
    CHECK(sos_residual(random_strategy(2, rng), FunctionalKind::Chsh) < 1e-10);
  }
}

TEST_CASE("quantum bound is never exceeded") {
  const auto i5 = builtin_functional(FunctionalKind::I5);
  qsim::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto strat = random_strategy(5, rng);
    const auto psi = random_state(5, rng);
    CHECK(evaluate(i5, strat, psi) <= kI5Max + 1e-9);
  }
}

TEST_CASE("local-unitary covariance") {
  const auto i5 = builtin_functional(FunctionalKind::I5);
  qsim::Rng rng(13);
  std::uniform_real_distribution<double> unif(0.0, 2 * M_PI);
  for (int trial = 0; trial < 10; ++trial) {
    const auto strat = random_strategy(5, rng);
    const auto psi = random_state(5, rng);

    std::vector<Mat2> unitaries;
    qsim::Vec rotated = psi.amplitudes();
    for (int j = 0; j < 5; ++j) {
      // Random single-qubit unitary from two phases and a rotation.
      const double t = unif(rng), p1 = unif(rng), p2 = unif(rng);
      Mat2 v;
      v << std::cos(t) * std::polar(1.0, p1), -std::sin(t) * std::polar(1.0, p2),
          std::sin(t) * std::polar(1.0, -p2), std::cos(t) * std::polar(1.0, -p1);
      unitaries.push_back(v);
    }
    qsim::Circuit rotate(5);
    for (int j = 0; j < 5; ++j) rotate.unitary(j, unitaries[j]);
    const auto vpsi = qsim::apply_circuit(psi, rotate);

    CHECK(evaluate(i5, strat, psi) ==
          doctest::Approx(evaluate(i5, strat.conjugated(unitaries), vpsi)).epsilon(1e-10));
  }
}

TEST_CASE("induced third observable") {
  const Mat2& x = qsim::PauliString::letter_matrix('X');
  const Mat2& y = qsim::PauliString::letter_matrix('Y');
  const Mat2& z = qsim::PauliString::letter_matrix('Z');

  const auto a2_xz = induced_third_observable(DichotomicObservable(x), DichotomicObservable(z));
  CHECK((a2_xz.matrix() - Mat2(-y)).cwiseAbs().maxCoeff() < 1e-14);

  const auto a2_xy = induced_third_observable(DichotomicObservable(x), DichotomicObservable(y));
  CHECK((a2_xy.matrix() - z).cwiseAbs().maxCoeff() < 1e-14);

  const double s = 1.0 / std::sqrt(2.0);
  const DichotomicObservable p((x + z) * s), m((x - z) * s);
  const auto w = induced_third_observable(p, m);
  CHECK((w.matrix() * p.matrix() + p.matrix() * w.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((w.matrix() * m.matrix() + m.matrix() * w.matrix()).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(induced_third_observable(DichotomicObservable(x), DichotomicObservable(x)),
                  std::invalid_argument);
}

TEST_CASE("random dichotomic observables are traceless involutions") {
  qsim::Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto o = random_dichotomic(rng);
    CHECK(std::abs(o.matrix().trace()) < 1e-12);
    CHECK((o.matrix() * o.matrix() - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("sample_estimate: zero variance on joint eigenstates") {
  // All parties measure X/Z; the single term is the first code generator, so
  // every shot yields product +1 on a code state.
  const DichotomicObservable ox(qsim::PauliString::letter_matrix('X'));
  const DichotomicObservable oz(qsim::PauliString::letter_matrix('Z'));
  std::vector<std::array<DichotomicObservable, 2>> settings(5, {ox, oz});
  const MeasurementStrategy strat{std::move(settings)};
  BellFunctional f{5, {{1.0, {0, 1, 1, 0, CorrelatorTerm::kIdentitySlot}}}, 1.0, 1.0};

  qsim::Rng rng(19);
  const auto est = sample_estimate(f, strat, code5::logical_zero(), 500, rng);
  CHECK(est.estimate == 1.0);
  CHECK(est.stderr == 0.0);
}

TEST_CASE("sample_estimate converges to the exact value") {
  const auto i5 = builtin_functional(FunctionalKind::I5);
  const auto strat = optimal_strategy(FunctionalKind::I5);
  qsim::Rng rng(42);
  const auto est = sample_estimate(i5, strat, code5::logical_zero(), 10000, rng);
  CHECK(std::abs(est.estimate - kI5Max) < 5.0 * est.stderr);
  CHECK(est.stderr < 0.05);

  // Density-matrix overload agrees statistically.
  qsim::Rng rng2(43);
  const auto est2 = sample_estimate(
      i5, strat, qsim::DensityMatrix::from_pure(code5::logical_zero()), 10000, rng2);
  CHECK(std::abs(est2.estimate - kI5Max) < 5.0 * est2.stderr);
}

TEST_CASE("sample_estimate is reproducible") {
  const auto chsh = builtin_functional(FunctionalKind::Chsh);
  const auto strat = optimal_strategy(FunctionalKind::Chsh);
  qsim::Rng a(7), b(7);
  const auto ra = sample_estimate(chsh, strat, bell_pair(), 200, a);
  const auto rb = sample_estimate(chsh, strat, bell_pair(), 200, b);
  CHECK(ra.estimate == rb.estimate);
  CHECK(ra.stderr == rb.stderr);
}
