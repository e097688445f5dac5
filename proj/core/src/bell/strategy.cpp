#include <cmath>

#include "qgps/bell/bell.hpp"
#include "qgps/qsim/evolve.hpp"
#include "qgps/qsim/pauli.hpp"

namespace qgps::bell {

MeasurementStrategy optimal_strategy(FunctionalKind kind) {
  const Mat2& x = qsim::PauliString::letter_matrix('X');
  const Mat2& z = qsim::PauliString::letter_matrix('Z');
  const double s = 1.0 / std::sqrt(2.0);
  const DichotomicObservable plus((x + z) * s);
  const DichotomicObservable minus((x - z) * s);
  const DichotomicObservable ox(x);
  const DichotomicObservable oz(z);

  if (kind == FunctionalKind::Chsh) {
    return MeasurementStrategy({{ox, oz}, {plus, minus}});
  }
  std::vector<std::array<DichotomicObservable, 2>> settings;
  settings.push_back({plus, minus});
  for (int j = 1; j < 5; ++j) settings.push_back({ox, oz});
  return MeasurementStrategy(std::move(settings));
}

std::array<Mat, 4> pseudo_stabilizers(const MeasurementStrategy& strat) {
  qsim::require(strat.parties() == 5, "pseudo-stabilizers are five-party objects");
  const double s = 1.0 / std::sqrt(2.0);
  const Mat2 a0 = strat.setting(0, 0).matrix();
  const Mat2 a1 = strat.setting(0, 1).matrix();
  const Mat2 sum = (a0 + a1) * s;
  const Mat2 diff = (a0 - a1) * s;

  auto embed = [](const Mat2& m, int qubit) { return qsim::embed_operator(5, {qubit}, m); };
  auto setting = [&](int party, int index) { return strat.setting(party, index).matrix(); };

  std::array<Mat, 4> out;
  out[0] = embed(sum, 0) * embed(setting(1, 1), 1) * embed(setting(2, 1), 2) *
           embed(setting(3, 0), 3);
  out[1] = embed(setting(1, 0), 1) * embed(setting(2, 1), 2) * embed(setting(3, 1), 3) *
           embed(setting(4, 0), 4);
  out[2] = embed(sum, 0) * embed(setting(2, 0), 2) * embed(setting(3, 1), 3) *
           embed(setting(4, 1), 4);
  out[3] = embed(diff, 0) * embed(setting(1, 0), 1) * embed(setting(3, 0), 3) *
           embed(setting(4, 1), 4);
  return out;
}

}  // namespace qgps::bell
