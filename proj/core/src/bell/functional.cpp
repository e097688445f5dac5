#include <cmath>

#include "qgps/bell/bell.hpp"

namespace qgps::bell {

int CorrelatorTerm::active_parties() const {
  int n = 0;
  for (int s : slots)
    if (s != kIdentitySlot) ++n;
  return n;
}

BellFunctional builtin_functional(FunctionalKind kind) {
  constexpr int id = CorrelatorTerm::kIdentitySlot;
  if (kind == FunctionalKind::Chsh) {
    return BellFunctional{
        2,
        {
            {+1.0, {0, 0}},
            {+1.0, {0, 1}},
            {+1.0, {1, 0}},
            {-1.0, {1, 1}},
        },
        2.0,
        2.0 * std::sqrt(2.0),
    };
  }
  // Seven expanded products; parties 1..5 are slots 0..4.
  return BellFunctional{
      5,
      {
          {+1.0, {0, 1, 1, 0, id}},
          {+1.0, {1, 1, 1, 0, id}},
          {+1.0, {id, 0, 1, 1, 0}},
          {+1.0, {0, id, 0, 1, 1}},
          {+1.0, {1, id, 0, 1, 1}},
          {+2.0, {0, 0, id, 0, 1}},
          {-2.0, {1, 0, id, 0, 1}},
      },
      5.0,
      4.0 * std::sqrt(2.0) + 1.0,
  };
}

namespace {

void check_term(const CorrelatorTerm& term, int parties) {
  qsim::require(static_cast<int>(term.slots.size()) == parties, "term slot count mismatch");
  qsim::require(term.active_parties() >= 1, "term has no active party");
}

// y <- (O on wire `qubit`) y for a general 2x2 operator.
void mix_rows(qsim::Vec& y, int qubit, int n, const Mat2& m) {
  const auto mask = qsim::bit_mask(qubit, n);
  for (std::ptrdiff_t i = 0; i < y.size(); ++i) {
    if (i & mask) continue;
    const std::ptrdiff_t j = i | mask;
    const cdouble a = y(i), b = y(j);
    y(i) = m(0, 0) * a + m(0, 1) * b;
    y(j) = m(1, 0) * a + m(1, 1) * b;
  }
}

void mix_rows(Mat& rho, int qubit, int n, const Mat2& m) {
  const auto mask = qsim::bit_mask(qubit, n);
  for (std::ptrdiff_t i = 0; i < rho.rows(); ++i) {
    if (i & mask) continue;
    const std::ptrdiff_t j = i | mask;
    for (std::ptrdiff_t c = 0; c < rho.cols(); ++c) {
      const cdouble a = rho(i, c), b = rho(j, c);
      rho(i, c) = m(0, 0) * a + m(0, 1) * b;
      rho(j, c) = m(1, 0) * a + m(1, 1) * b;
    }
  }
}

double real_checked(cdouble v) {
  qsim::require(std::abs(v.imag()) < 1e-10, "correlator has imaginary part");
  return v.real();
}

}  // namespace

double evaluate(const BellFunctional& f, const MeasurementStrategy& strat,
                const Statevector& state) {
  qsim::require(strat.parties() == f.parties, "strategy party count mismatch");
  qsim::require(state.num_qubits() == f.parties, "one qubit per party required");
  double total = 0.0;
  for (const CorrelatorTerm& term : f.terms) {
    check_term(term, f.parties);
    qsim::Vec y = state.amplitudes();
    for (int j = 0; j < f.parties; ++j)
      if (term.slots[j] != CorrelatorTerm::kIdentitySlot)
        mix_rows(y, j, f.parties, strat.setting(j, term.slots[j]).matrix());
    total += term.coefficient * real_checked(state.amplitudes().dot(y));
  }
  return total;
}

double evaluate(const BellFunctional& f, const MeasurementStrategy& strat,
                const DensityMatrix& dm) {
  qsim::require(strat.parties() == f.parties, "strategy party count mismatch");
  qsim::require(dm.num_qubits() == f.parties, "one qubit per party required");
  double total = 0.0;
  for (const CorrelatorTerm& term : f.terms) {
    check_term(term, f.parties);
    Mat y = dm.entries();
    for (int j = 0; j < f.parties; ++j)
      if (term.slots[j] != CorrelatorTerm::kIdentitySlot)
        mix_rows(y, j, f.parties, strat.setting(j, term.slots[j]).matrix());
    total += term.coefficient * real_checked(y.trace());
  }
  return total;
}

ClassicalMaximum classical_maximum(const BellFunctional& f) {
  qsim::require(f.parties <= 6, "deterministic enumeration capped at 6 parties");
  const long total = 1L << (2 * f.parties);  // 4^parties
  ClassicalMaximum best{-1e300, {}};
  DeterministicAssignment assign(f.parties);
  for (long code = 0; code < total; ++code) {
    for (int j = 0; j < f.parties; ++j) {
      assign[j][0] = (code >> (2 * j)) & 1 ? -1 : +1;
      assign[j][1] = (code >> (2 * j + 1)) & 1 ? -1 : +1;
    }
    double value = 0.0;
    for (const CorrelatorTerm& term : f.terms) {
      double prod = term.coefficient;
      for (int j = 0; j < f.parties; ++j)
        if (term.slots[j] != CorrelatorTerm::kIdentitySlot) prod *= assign[j][term.slots[j]];
      value += prod;
    }
    if (value > best.value) best = {value, assign};
  }
  return best;
}

}  // namespace qgps::bell
