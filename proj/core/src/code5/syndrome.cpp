#include <map>

#include "qgps/code5/code5.hpp"

namespace qgps::code5 {

PauliString to_pauli_string(const PauliError& err) {
  qsim::require(err.qubit >= 0 && err.qubit < kNumQubits, "error qubit out of range");
  qsim::require(err.letter == 'X' || err.letter == 'Y' || err.letter == 'Z',
                "error letter must be X, Y or Z");
  std::string letters(kNumQubits, 'I');
  letters[err.qubit] = err.letter;
  return PauliString(letters);
}

Syndrome syndrome_of_error(const PauliError& err) {
  const PauliString p = to_pauli_string(err);
  Syndrome syn;
  for (int k = 0; k < kNumGenerators; ++k)
    syn.bits[k] = p.commutes_with(stabilizer_generators()[k]) ? 0 : 1;
  return syn;
}

std::optional<PauliError> decode_syndrome(const Syndrome& syn) {
  static const std::map<int, PauliError> table = [] {
    std::map<int, PauliError> t;
    for (int q = 0; q < kNumQubits; ++q)
      for (char letter : {'X', 'Y', 'Z'}) {
        const PauliError err{q, letter};
        t.emplace(syndrome_of_error(err).index(), err);
      }
    return t;
  }();
  if (syn.is_trivial()) return std::nullopt;
  return table.at(syn.index());
}

}  // namespace qgps::code5
