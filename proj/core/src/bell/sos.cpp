#include <cmath>

#include "qgps/bell/bell.hpp"
#include "qgps/qsim/evolve.hpp"

namespace qgps::bell {

namespace {

Mat functional_operator(const BellFunctional& f, const MeasurementStrategy& strat) {
  const auto d = qsim::dim_of(f.parties);
  Mat total = Mat::Zero(d, d);
  for (const CorrelatorTerm& term : f.terms) {
    Mat prod = Mat::Identity(d, d);
    for (int j = 0; j < f.parties; ++j)
      if (term.slots[j] != CorrelatorTerm::kIdentitySlot)
        prod = prod * qsim::embed_operator(f.parties, {j},
                                           strat.setting(j, term.slots[j]).matrix());
    total += term.coefficient * prod;
  }
  return total;
}

}  // namespace

double sos_residual(const MeasurementStrategy& strat, FunctionalKind kind) {
  const double s = 1.0 / std::sqrt(2.0);
  const BellFunctional f = builtin_functional(kind);
  qsim::require(strat.parties() == f.parties, "strategy party count mismatch");
  const Mat op = functional_operator(f, strat);
  const auto d = op.rows();
  const Mat id = Mat::Identity(d, d);

  Mat sos;
  if (kind == FunctionalKind::Chsh) {
    // 2sqrt2 I - B = ((P - B0)^2 + (P' - B1)^2)/sqrt2 with P = (A0+A1)/sqrt2.
    const Mat2 a0 = strat.setting(0, 0).matrix();
    const Mat2 a1 = strat.setting(0, 1).matrix();
    const Mat p = qsim::embed_operator(2, {0}, Mat2((a0 + a1) * s));
    const Mat pp = qsim::embed_operator(2, {0}, Mat2((a0 - a1) * s));
    const Mat b0 = qsim::embed_operator(2, {1}, strat.setting(1, 0).matrix());
    const Mat b1 = qsim::embed_operator(2, {1}, strat.setting(1, 1).matrix());
    const Mat t0 = p - b0;
    const Mat t1 = pp - b1;
    sos = s * (t0 * t0) + s * (t1 * t1);
  } else {
    const auto ps = pseudo_stabilizers(strat);
    const double w[4] = {s, 0.5, s, std::sqrt(2.0)};
    sos = Mat::Zero(d, d);
    for (int k = 0; k < 4; ++k) {
      const Mat t = id - ps[k];
      sos += w[k] * (t * t);
    }
  }
  return (f.quantum_bound * id - op - sos).norm();
}

}  // namespace qgps::bell
