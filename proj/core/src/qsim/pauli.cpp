#include "qgps/qsim/pauli.hpp"

namespace qgps::qsim {

PauliString::PauliString(std::string letters, int sign)
    : letters_(std::move(letters)), sign_(sign) {
  require(sign_ == 1 || sign_ == -1, "PauliString sign must be +1 or -1");
  require(!letters_.empty() && static_cast<int>(letters_.size()) <= kMaxQubits,
          "PauliString length out of range");
  for (char c : letters_) {
    require(c == 'I' || c == 'X' || c == 'Y' || c == 'Z',
            "PauliString letters must be in {I,X,Y,Z}");
  }
}

int PauliString::weight() const {
  int w = 0;
  for (char c : letters_)
    if (c != 'I') ++w;
  return w;
}

bool PauliString::commutes_with(const PauliString& other) const {
  require(letters_.size() == other.letters_.size(), "PauliString length mismatch");
  int anti = 0;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    char a = letters_[i], b = other.letters_[i];
    if (a != 'I' && b != 'I' && a != b) ++anti;
  }
  return anti % 2 == 0;
}

std::ptrdiff_t PauliString::flip_mask() const {
  std::ptrdiff_t mask = 0;
  int n = num_qubits();
  for (int q = 0; q < n; ++q) {
    char c = letters_[q];
    if (c == 'X' || c == 'Y') mask |= bit_mask(q, n);
  }
  return mask;
}

cdouble PauliString::basis_coefficient(std::ptrdiff_t index) const {
  // Per-qubit action: X|b> = |1-b>, Y|b> = i(-1)^b |1-b>, Z|b> = (-1)^b |b>.
  int n = num_qubits();
  int minus = 0;
  int ypow = 0;
  for (int q = 0; q < n; ++q) {
    char c = letters_[q];
    if (c == 'I' || c == 'X') continue;
    int b = bit_of(index, q, n);
    if (c == 'Y') {
      ++ypow;
      minus ^= b;
    } else {  // Z
      minus ^= b;
    }
  }
  static const cdouble ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cdouble coeff = ipow[ypow % 4];
  if (minus) coeff = -coeff;
  return static_cast<double>(sign_) * coeff;
}

const Mat2& PauliString::letter_matrix(char letter) {
  static const Mat2 I = Mat2::Identity();
  static const Mat2 X = (Mat2() << 0, 1, 1, 0).finished();
  static const Mat2 Y = (Mat2() << 0, cdouble(0, -1), cdouble(0, 1), 0).finished();
  static const Mat2 Z = (Mat2() << 1, 0, 0, -1).finished();
  switch (letter) {
    case 'I': return I;
    case 'X': return X;
    case 'Y': return Y;
    default: return Z;
  }
}

Mat PauliString::to_matrix() const {
  // Qubit 0 is the leftmost tensor factor.
  Mat m = Mat::Identity(1, 1) * static_cast<double>(sign_);
  for (char c : letters_) {
    const Mat2& l = letter_matrix(c);
    Mat next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        next.block<2, 2>(2 * i, 2 * j) = m(i, j) * l;
    m = std::move(next);
  }
  return m;
}

}  // namespace qgps::qsim
