#include <cmath>

#include "qgps/resource/resource.hpp"

namespace qgps::resource {

CircuitCost circuit_cost(const qsim::Circuit& circuit) {
  CircuitCost cost;
  int layer_arity = 0;  // 0 = no open layer
  std::ptrdiff_t layer_mask = 0;

  for (const auto& gate : circuit.gates()) {
    const int arity = gate.arity();
    qsim::require(arity <= 2, "cost model covers 1- and 2-qubit gates only");
    if (arity == 1)
      ++cost.n_1q;
    else
      ++cost.n_2q;

    std::ptrdiff_t mask = 0;
    for (int q : gate.targets()) mask |= std::ptrdiff_t{1} << q;

    if (layer_arity == arity && !(layer_mask & mask)) {
      layer_mask |= mask;  // joins the trailing layer
      continue;
    }
    layer_arity = arity;
    layer_mask = mask;
    if (arity == 1)
      ++cost.d_1q;
    else
      ++cost.d_2q;
  }
  return cost;
}

double total_time(const HardwareProfile& profile, const CircuitCost& cost) {
  validate(profile);
  return cost.d_1q * profile.t_1q + cost.d_2q * profile.t_2q;
}

double fidelity_bound(const HardwareProfile& profile, const CircuitCost& cost) {
  validate(profile);
  return std::pow(profile.f_1q, cost.n_1q) * std::pow(profile.f_2q, cost.n_2q);
}

}  // namespace qgps::resource
