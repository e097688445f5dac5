#pragma once

#include <string>

#include "qgps/qsim/types.hpp"

namespace qgps::qsim {

/// A signed Pauli string over {I,X,Y,Z}, one letter per qubit (qubit 0 first).
class PauliString {
 public:
  PauliString(std::string letters, int sign = +1);

  const std::string& letters() const { return letters_; }
  int sign() const { return sign_; }
  int num_qubits() const { return static_cast<int>(letters_.size()); }
  char letter(int qubit) const { return letters_.at(qubit); }
  int weight() const;

  bool commutes_with(const PauliString& other) const;
  PauliString negated() const { return PauliString(letters_, -sign_); }

  /// Action on a basis ket: P|index> = coefficient(index) |index ^ flip_mask()>.
  std::ptrdiff_t flip_mask() const;
  cdouble basis_coefficient(std::ptrdiff_t index) const;

  Mat to_matrix() const;

  static const Mat2& letter_matrix(char letter);

 private:
  std::string letters_;
  int sign_;
};

}  // namespace qgps::qsim
