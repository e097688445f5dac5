#include "qgps/qsim/evolve.hpp"

namespace qgps::qsim {

namespace {

void apply_1q_inplace(Vec& amp, int qubit, int n, const Mat2& u) {
  const auto mask = bit_mask(qubit, n);
  const auto d = amp.size();
  for (std::ptrdiff_t i = 0; i < d; ++i) {
    if (i & mask) continue;
    const std::ptrdiff_t j = i | mask;
    const cdouble a = amp(i), b = amp(j);
    amp(i) = u(0, 0) * a + u(0, 1) * b;
    amp(j) = u(1, 0) * a + u(1, 1) * b;
  }
}

void apply_cnot_inplace(Vec& amp, int control, int target, int n) {
  const auto cm = bit_mask(control, n), tm = bit_mask(target, n);
  const auto d = amp.size();
  for (std::ptrdiff_t i = 0; i < d; ++i) {
    if ((i & cm) && !(i & tm)) std::swap(amp(i), amp(i | tm));
  }
}

// rho -> U rho U^dag, applied as row mixing then column mixing.
void apply_1q_dm_inplace(Mat& rho, int qubit, int n, const Mat2& u) {
  const auto mask = bit_mask(qubit, n);
  const auto d = rho.rows();
  for (std::ptrdiff_t i = 0; i < d; ++i) {
    if (i & mask) continue;
    const std::ptrdiff_t j = i | mask;
    for (std::ptrdiff_t c = 0; c < d; ++c) {
      const cdouble a = rho(i, c), b = rho(j, c);
      rho(i, c) = u(0, 0) * a + u(0, 1) * b;
      rho(j, c) = u(1, 0) * a + u(1, 1) * b;
    }
  }
  for (std::ptrdiff_t i = 0; i < d; ++i) {
    if (i & mask) continue;
    const std::ptrdiff_t j = i | mask;
    for (std::ptrdiff_t r = 0; r < d; ++r) {
      const cdouble a = rho(r, i), b = rho(r, j);
      rho(r, i) = std::conj(u(0, 0)) * a + std::conj(u(0, 1)) * b;
      rho(r, j) = std::conj(u(1, 0)) * a + std::conj(u(1, 1)) * b;
    }
  }
}

void apply_cnot_dm_inplace(Mat& rho, int control, int target, int n) {
  const auto cm = bit_mask(control, n), tm = bit_mask(target, n);
  const auto d = rho.rows();
  for (std::ptrdiff_t i = 0; i < d; ++i)
    if ((i & cm) && !(i & tm)) rho.row(i).swap(rho.row(i | tm));
  for (std::ptrdiff_t i = 0; i < d; ++i)
    if ((i & cm) && !(i & tm)) rho.col(i).swap(rho.col(i | tm));
}

}  // namespace

Statevector apply_gate(const Statevector& state, const Gate& gate) {
  const int n = state.num_qubits();
  Vec amp = state.amplitudes();
  if (gate.kind() == GateKind::Cnot)
    apply_cnot_inplace(amp, gate.control(), gate.target(), n);
  else
    apply_1q_inplace(amp, gate.qubit(), n, gate.matrix1q());
  return Statevector(n, std::move(amp));
}

Statevector apply_circuit(const Statevector& state, const Circuit& circuit) {
  require(state.num_qubits() == circuit.num_qubits(), "register size mismatch");
  const int n = state.num_qubits();
  Vec amp = state.amplitudes();
  for (const Gate& g : circuit.gates()) {
    if (g.kind() == GateKind::Cnot)
      apply_cnot_inplace(amp, g.control(), g.target(), n);
    else
      apply_1q_inplace(amp, g.qubit(), n, g.matrix1q());
  }
  return Statevector(n, std::move(amp));
}

DensityMatrix apply_gate(const DensityMatrix& dm, const Gate& gate) {
  const int n = dm.num_qubits();
  Mat rho = dm.entries();
  if (gate.kind() == GateKind::Cnot)
    apply_cnot_dm_inplace(rho, gate.control(), gate.target(), n);
  else
    apply_1q_dm_inplace(rho, gate.qubit(), n, gate.matrix1q());
  return DensityMatrix(n, std::move(rho));
}

DensityMatrix apply_circuit(const DensityMatrix& dm, const Circuit& circuit) {
  require(dm.num_qubits() == circuit.num_qubits(), "register size mismatch");
  const int n = dm.num_qubits();
  Mat rho = dm.entries();
  for (const Gate& g : circuit.gates()) {
    if (g.kind() == GateKind::Cnot)
      apply_cnot_dm_inplace(rho, g.control(), g.target(), n);
    else
      apply_1q_dm_inplace(rho, g.qubit(), n, g.matrix1q());
  }
  return DensityMatrix(n, std::move(rho));
}

Mat embed_operator(int num_qubits, const std::vector<int>& targets, const Mat& op) {
  const int k = static_cast<int>(targets.size());
  require(op.rows() == dim_of(k) && op.cols() == dim_of(k), "operator shape mismatch");
  for (int q : targets) require(q >= 0 && q < num_qubits, "target outside register");

  const auto d = dim_of(num_qubits);
  Mat full = Mat::Zero(d, d);
  // Index the subspace by the listed qubits (first listed = most significant).
  std::vector<std::ptrdiff_t> masks;
  masks.reserve(k);
  for (int q : targets) masks.push_back(bit_mask(q, num_qubits));

  std::ptrdiff_t union_mask = 0;
  for (auto m : masks) union_mask |= m;

  auto with_sub = [&](std::ptrdiff_t rest, std::ptrdiff_t s) {
    std::ptrdiff_t idx = rest;
    for (int a = 0; a < k; ++a)
      if ((s >> (k - 1 - a)) & 1) idx |= masks[a];
    return idx;
  };

  const auto dk = dim_of(k);
  for (std::ptrdiff_t rest = 0; rest < d; ++rest) {
    if (rest & union_mask) continue;
    for (std::ptrdiff_t r = 0; r < dk; ++r)
      for (std::ptrdiff_t c = 0; c < dk; ++c)
        full(with_sub(rest, r), with_sub(rest, c)) = op(r, c);
  }
  return full;
}

DensityMatrix apply_channel(const DensityMatrix& dm, const KrausChannel& channel) {
  const int n = dm.num_qubits();
  for (int q : channel.targets()) require(q < n, "channel target outside register");
  const auto d = dm.dim();
  Mat out = Mat::Zero(d, d);
  for (const Mat& k : channel.operators()) {
    Mat full = embed_operator(n, channel.targets(), k);
    out += full * dm.entries() * full.adjoint();
  }
  return DensityMatrix(n, std::move(out), kChannelTol);
}

}  // namespace qgps::qsim
