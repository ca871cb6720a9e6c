// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/qhe/garden_hose.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qhelab/qsim/gates.hpp"
#include "qhelab/qsim/ops.hpp"

namespace qhelab {

namespace {

void check(const QuantumState& s, int qubit, Bit p, Bit q) {
  if (qubit < 0 || qubit >= s.num_qubits()) throw std::out_of_range("qubit index out of range");
  if (p > 1 || q > 1) throw std::invalid_argument("p and q are bits");
}

void finish(GardenHoseResult& r, Bit p, Bit q) {
  r.position = p ? HoseOutput::Out2 : HoseOutput::Out1;
  r.applied_pdg = p ^ q;
  const Bit ax = r.alice_bits[2 * p], az = r.alice_bits[2 * p + 1];
  r.x = ax ^ r.bob_bits[0];
  r.z = az ^ r.bob_bits[1] ^ (r.applied_pdg & r.bob_bits[0]);
}

}  // namespace

GardenHoseResult garden_hose_literal(QuantumState& s, int qubit, Bit p, Bit q, Rng& rng) {
  check(s, qubit, p, q);
  const int n = s.num_qubits();
  if (n + 8 > kMaxStateQubits) throw std::length_error("garden hose exceeds the statevector cap");
  // Pair e in {E2, E1, E0, E-1} has Alice's half at n + 2e and Bob's at n + 2e + 1.
  auto alice_half = [n](int e) { return n + 2 * e; };
  auto bob_half = [n](int e) { return n + 2 * e + 1; };
  QuantumState t = s;
  for (int e = 0; e < 4; ++e) {
    QuantumState pair = QuantumState::from_vector(epr_pair());
    pair.set_owner(0, Party::Alice);
    pair.set_owner(1, Party::Bob);
    t = tensor(t, pair);
  }
  std::vector<std::pair<int, Bit>> measured;
  GardenHoseResult r;

  const int entry = p ? 1 : 0;
  BellMeasurement bob = bell_measure(t, qubit, bob_half(entry), rng);
  r.bob_bits = {bob.mx, bob.mz};
  measured.push_back({qubit, bob.mz});
  measured.push_back({bob_half(entry), bob.mx});
  t = std::move(bob.state);

  apply_gate_inplace(t, gates::Pdg(), {alice_half(q ? 0 : 1)});
  for (int path = 0; path < 2; ++path) {
    BellMeasurement al = bell_measure(t, alice_half(path), alice_half(path + 2), rng);
    r.alice_bits[2 * path] = al.mx;
    r.alice_bits[2 * path + 1] = al.mz;
    measured.push_back({alice_half(path), al.mz});
    measured.push_back({alice_half(path + 2), al.mx});
    t = std::move(al.state);
  }

  // The idle entry half and the unused output are now a Bell pair; discard it.
  for (int idx : {bob_half(1 - entry), bob_half(3 - entry)}) {
    Measurement m = measure(t, Basis::Z, idx, rng);
    measured.push_back({idx, m.outcome});
    t = std::move(m.state);
  }

  int out = bob_half(2 + entry);
  std::sort(measured.begin(), measured.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [idx, outcome] : measured) {
    t = remove_qubit(t, idx, Basis::Z, outcome);
    if (idx < out) --out;
  }
  t = move_qubit(t, out, qubit);
  t.set_owner(qubit, Party::Bob);
  s = std::move(t);
  finish(r, p, q);
  return r;
}

GardenHoseResult garden_hose_contract(QuantumState& s, int qubit, Bit p, Bit q, Rng& rng) {
  check(s, qubit, p, q);
  GardenHoseResult r;
  r.bob_bits = {rng.bit(), rng.bit()};
  for (Bit& b : r.alice_bits) b = rng.bit();
  finish(r, p, q);
  const Bit ax = r.alice_bits[2 * p], az = r.alice_bits[2 * p + 1];
  if (r.bob_bits[1]) apply_gate_inplace(s, gates::Z(), {qubit});
  if (r.bob_bits[0]) apply_gate_inplace(s, gates::X(), {qubit});
  if (r.applied_pdg) apply_gate_inplace(s, gates::Pdg(), {qubit});
  if (az) apply_gate_inplace(s, gates::Z(), {qubit});
  if (ax) apply_gate_inplace(s, gates::X(), {qubit});
  s.set_owner(qubit, Party::Bob);
  return r;
}

}  // namespace qhelab
