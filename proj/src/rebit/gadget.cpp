// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/rebit/gadget.hpp"

#include <stdexcept>

#include "qhelab/rebit/encoding.hpp"

namespace qhelab {

GadgetTarget GadgetTarget::quarter(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("quarter-turn count must be 0..3");
  return {Mode::QuarterTurn, k};
}

GadgetTarget GadgetTarget::ty() { return {Mode::TY, 0}; }

Matrix GadgetTarget::matrix() const {
  if (mode == Mode::TY) return gates::Ty().matrix();
  return gates::Ry(quarter_turns * kPi / 2).matrix();
}

int gadget_bob_rotation(const GadgetTarget& g, Bit m) {
  if (g.mode == GadgetTarget::Mode::TY) return m ? 1 : 3;
  return (g.quarter_turns % 2) ? 2 : 0;
}

Bit gadget_correction(const GadgetTarget& g, Bit m, Bit s) {
  // Rows: target (k=0..3, then T_y); columns: m. Entry is r XOR s.
  static constexpr Bit flip[5][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {1, 0}};
  const int row = g.mode == GadgetTarget::Mode::TY ? 4 : g.quarter_turns;
  return flip[row][m & 1] ^ (s & 1);
}

GadgetOutcome uncertain_gadget(QuantumState& s, int data_qubit, const GadgetTarget& g, Rng& rng) {
  if (g.mode == GadgetTarget::Mode::QuarterTurn && (g.quarter_turns < 0 || g.quarter_turns > 3))
    throw std::invalid_argument("quarter-turn count must be 0..3");
  if (data_qubit < 0 || data_qubit >= s.num_qubits()) throw std::out_of_range("data qubit out of range");
  const int n = s.num_qubits();
  const int a = n, b = n + 1;
  QuantumState pair = QuantumState::from_vector(epr_pair());
  pair.set_owner(0, Party::Alice);
  pair.set_owner(1, Party::Bob);
  QuantumState t = tensor(s, pair);

  apply_gate_inplace(t, gates::CiY(), {a, data_qubit});
  apply_gate_inplace(t, gates::Ry(kPi / 2), {a});
  Measurement ma = measure(t, Basis::Z, a, rng);

  GadgetOutcome out;
  out.m = ma.outcome;
  out.bob_j = gadget_bob_rotation(g, out.m);
  apply_gate_inplace(ma.state, gates::Ry(out.bob_j * kPi / 4), {b});
  Measurement mb = measure(ma.state, Basis::Z, b, rng);
  out.s = mb.outcome;
  out.r = gadget_correction(g, out.m, out.s);

  t = remove_qubit(mb.state, b, Basis::Z, out.s);
  s = remove_qubit(t, a, Basis::Z, out.m);
  return out;
}

namespace {

// Physical sequence for logical R_x(t) = R_z(-pi/2) R_y(t) R_z(pi/2).
std::vector<PhysicalGate> rx_sequence(double theta, int data, int phase) {
  std::vector<PhysicalGate> seq;
  for (const LogicalGate& lg : {LogicalGate{"rz", kPi / 2, {data}}, LogicalGate{"ry", theta, {data}},
                                LogicalGate{"rz", -kPi / 2, {data}}}) {
    auto part = translate_logical_gate(lg, phase);
    seq.insert(seq.end(), part.begin(), part.end());
  }
  return seq;
}

Matrix sequence_matrix(const std::vector<PhysicalGate>& seq, int data, int phase) {
  // Local register: data at 0, phase at 1.
  Matrix u = Matrix::Identity(4, 4);
  for (const PhysicalGate& pg : seq) {
    std::vector<int> local;
    for (int q : pg.targets) local.push_back(q == data ? 0 : 1);
    apply_matrix_left(u, 2, pg.gate.matrix(), local);
  }
  (void)phase;
  return u;
}

}  // namespace

RzGadgetOutcome uncertain_rz_gadget(QuantumState& s, int data_qubit, int phase_qubit, int k, Rng& rng) {
  if (k < 0 || k > 3) throw std::invalid_argument("quarter-turn count must be 0..3");
  // R_z(-k' pi/2) ~ R_x(-pi/2) R_y(k' pi/2) R_x(pi/2), so k' = -k mod 4.
  const auto pre = rx_sequence(kPi / 2, data_qubit, phase_qubit);
  const auto post = rx_sequence(-kPi / 2, data_qubit, phase_qubit);
  apply_physical(s, pre);
  RzGadgetOutcome out;
  out.inner = uncertain_gadget(s, data_qubit, GadgetTarget::quarter((4 - k) % 4), rng);
  apply_physical(s, post);
  const Matrix w = sequence_matrix(post, data_qubit, phase_qubit);
  const Matrix y = tensor_ops({gates::Ry(kPi).matrix(), Matrix::Identity(2, 2)});
  out.residual = w * y * w.adjoint();
  return out;
}

}  // namespace qhelab
