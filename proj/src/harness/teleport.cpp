// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/harness/teleport.hpp"

#include <stdexcept>

namespace qhelab {

void TeleportMask::validate() const {
  if (withheld & disclosed) throw std::invalid_argument("a correction bit cannot be both withheld and disclosed");
  if ((withheld | disclosed) != kMaskBoth) throw std::invalid_argument("every correction bit must be withheld or disclosed");
}

Bit TeleportRecord::disclosed_x() const {
  if (!(mask.disclosed & kMaskX)) throw std::logic_error("x correction was withheld");
  return disclosed[0];
}

Bit TeleportRecord::disclosed_z() const {
  if (!(mask.disclosed & kMaskZ)) throw std::logic_error("z correction was withheld");
  return disclosed[(mask.disclosed & kMaskX) ? 1 : 0];
}

namespace {

TeleportRecord make_record(const QuantumState& s, int qubit, TeleportMask mask, Bit a, Bit b) {
  TeleportRecord rec;
  rec.qubit = qubit;
  rec.sender = s.owner(qubit);
  rec.receiver = other(rec.sender);
  rec.mask = mask;
  if (mask.disclosed & kMaskX) rec.disclosed.push_back(a);
  if (mask.disclosed & kMaskZ) rec.disclosed.push_back(b);
  rec.actual = Secret<std::array<Bit, 2>>(rec.sender, {a, b});
  return rec;
}

}  // namespace

TeleportRecord teleport_symbolic(QuantumState& s, int qubit, TeleportMask mask, Rng& rng) {
  mask.validate();
  if (qubit < 0 || qubit >= s.num_qubits()) throw std::out_of_range("qubit index out of range");
  const Bit a = rng.bit();
  const Bit b = rng.bit();
  TeleportRecord rec = make_record(s, qubit, mask, a, b);
  if (b) apply_gate_inplace(s, gates::Z(), {qubit});
  if (a) apply_gate_inplace(s, gates::X(), {qubit});
  s.set_owner(qubit, rec.receiver);
  return rec;
}

TeleportRecord teleport_literal(QuantumState& s, int qubit, TeleportMask mask, Rng& rng) {
  mask.validate();
  if (qubit < 0 || qubit >= s.num_qubits()) throw std::out_of_range("qubit index out of range");
  const Party sender = s.owner(qubit);
  const int n = s.num_qubits();
  QuantumState pair = QuantumState::from_vector(epr_pair());
  pair.set_owner(0, sender);
  pair.set_owner(1, other(sender));
  QuantumState t = tensor(s, pair);
  BellMeasurement bm = bell_measure(t, qubit, n, rng);
  t = remove_qubit(bm.state, n, Basis::Z, bm.mx);
  t = remove_qubit(t, qubit, Basis::Z, bm.mz);
  t = move_qubit(t, n - 1, qubit);
  TeleportRecord rec = make_record(s, qubit, mask, bm.mx, bm.mz);
  t.set_role(qubit, s.labels()[qubit].role);
  s = std::move(t);
  return rec;
}

void apply_pauli_correction(QuantumState& s, int qubit, Bit x, Bit z) {
  if (x) apply_gate_inplace(s, gates::X(), {qubit});
  if (z) apply_gate_inplace(s, gates::Z(), {qubit});
}

void apply_disclosed_corrections(QuantumState& s, const TeleportRecord& rec) {
  const Bit x = (rec.mask.disclosed & kMaskX) ? rec.disclosed_x() : 0;
  const Bit z = (rec.mask.disclosed & kMaskZ) ? rec.disclosed_z() : 0;
  apply_pauli_correction(s, rec.qubit, x, z);
}

}  // namespace qhelab
