#include <algorithm>

#include "qgps/adversary/adversary.hpp"
#include "qgps/qsim/evolve.hpp"

namespace qgps::adversary {

namespace {

struct LabelVisitor {
  std::string operator()(const NoAttack&) const { return "none"; }
  std::string operator()(const PauliAttack& a) const {
    std::string s = "pauli:";
    for (const auto& e : a.errors) {
      s += e.letter;
      s += std::to_string(e.qubit);
    }
    return s;
  }
  std::string operator()(const Depolarizing& a) const {
    std::string s = "depolarizing:p=" + std::to_string(a.p) + ":q=";
    for (int q : a.qubits) s += std::to_string(q);
    return s;
  }
  std::string operator()(const Dephasing& a) const {
    std::string s = "dephasing:q=";
    for (int q : a.qubits) s += std::to_string(q);
    return s;
  }
  std::string operator()(const StateReplacement&) const { return "replacement"; }
};

void check_targets(const std::vector<int>& qubits, int n) {
  qsim::require(!qubits.empty(), "attack needs at least one target qubit");
  std::vector<int> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  qsim::require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "attack targets must be distinct");
  for (int q : sorted) qsim::require(q >= 0 && q < n, "attack target outside register");
}

}  // namespace

std::string attack_label(const AttackModel& attack) {
  return std::visit(LabelVisitor{}, attack);
}

DensityMatrix apply_attack(const DensityMatrix& dm, const AttackModel& attack) {
  const int n = dm.num_qubits();
  return std::visit(
      [&](const auto& a) -> DensityMatrix {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, NoAttack>) {
          return dm;
        } else if constexpr (std::is_same_v<T, PauliAttack>) {
          qsim::require(!a.errors.empty(), "empty Pauli attack");
          std::vector<int> qubits;
          std::string letters(n, 'I');
          for (const auto& e : a.errors) {
            qubits.push_back(e.qubit);
            qsim::require(e.letter == 'X' || e.letter == 'Y' || e.letter == 'Z',
                          "attack letter must be X, Y or Z");
            letters[e.qubit] = e.letter;
          }
          check_targets(qubits, n);
          const qsim::Mat p = qsim::PauliString(letters).to_matrix();
          qsim::Mat out = p * dm.entries() * p.adjoint();
          return DensityMatrix(n, std::move(out));
        } else if constexpr (std::is_same_v<T, Depolarizing>) {
          qsim::require(a.p >= 0.0 && a.p <= 1.0, "depolarizing probability out of range");
          check_targets(a.qubits, n);
          std::vector<int> targets = a.qubits;
          std::sort(targets.begin(), targets.end());
          const int k = static_cast<int>(targets.size());
          qsim::Mat mixed;
          if (k == n) {
            mixed = qsim::Mat::Identity(dm.dim(), dm.dim()) / static_cast<double>(dm.dim());
          } else {
            std::vector<int> keep;
            for (int q = 0; q < n; ++q)
              if (!std::binary_search(targets.begin(), targets.end(), q)) keep.push_back(q);
            const DensityMatrix rest = dm.partial_trace_keep(keep);
            // I/2^k on the targets tensored back in place.
            const auto dk = qsim::dim_of(k);
            mixed = qsim::Mat::Zero(dm.dim(), dm.dim());
            for (std::ptrdiff_t r = 0; r < rest.dim(); ++r)
              for (std::ptrdiff_t c = 0; c < rest.dim(); ++c) {
                std::ptrdiff_t rbase = 0, cbase = 0;
                for (int a2 = 0; a2 < static_cast<int>(keep.size()); ++a2) {
                  if ((r >> (keep.size() - 1 - a2)) & 1) rbase |= qsim::bit_mask(keep[a2], n);
                  if ((c >> (keep.size() - 1 - a2)) & 1) cbase |= qsim::bit_mask(keep[a2], n);
                }
                for (std::ptrdiff_t t = 0; t < dk; ++t) {
                  std::ptrdiff_t tmask = 0;
                  for (int a2 = 0; a2 < k; ++a2)
                    if ((t >> (k - 1 - a2)) & 1) tmask |= qsim::bit_mask(targets[a2], n);
                  mixed(rbase | tmask, cbase | tmask) +=
                      rest.entries()(r, c) / static_cast<double>(dk);
                }
              }
          }
          qsim::Mat out = (1.0 - a.p) * dm.entries() + a.p * mixed;
          return DensityMatrix(n, std::move(out));
        } else if constexpr (std::is_same_v<T, Dephasing>) {
          check_targets(a.qubits, n);
          DensityMatrix out = dm;
          for (int q : a.qubits)
            out = qsim::apply_channel(out, qsim::KrausChannel::dephasing(q));
          return out;
        } else {
          static_assert(std::is_same_v<T, StateReplacement>);
          qsim::require(a.state.num_qubits() == n, "replacement state register mismatch");
          return a.state;
        }
      },
      attack);
}

std::vector<AttackModel> single_pauli_attacks() {
  std::vector<AttackModel> attacks;
  for (int q = 0; q < code5::kNumQubits; ++q)
    for (char letter : {'X', 'Y', 'Z'})
      attacks.push_back(PauliAttack{{PauliError{q, letter}}});
  return attacks;
}

}  // namespace qgps::adversary
