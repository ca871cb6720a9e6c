// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/rebit_schemes/schemes.hpp"

#include <algorithm>
#include <stdexcept>

#include "qhelab/harness/transcript.hpp"
#include "qhelab/qsim/gates.hpp"
#include "qhelab/qsim/ops.hpp"
#include "qhelab/rebit/encoding.hpp"
#include "qhelab/rebit/ydiag.hpp"

namespace qhelab {

std::string PauliCorrectionList::label(int q) const {
  static const char* names[2][2] = {{"I", "Z"}, {"X", "Ry(pi)"}};
  return names[x.at(q)][z.at(q)];
}

bool PauliCorrectionList::is_identity() const {
  return std::all_of(x.begin(), x.end(), [](Bit b) { return b == 0; }) &&
         std::all_of(z.begin(), z.end(), [](Bit b) { return b == 0; });
}

namespace {

Matrix frame_operator(const std::vector<Bit>& xs, const std::vector<Bit>& zs) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < xs.size(); ++i) ops.push_back(gates::pauli(xs[i] ? 1 : 0) * gates::pauli(zs[i] ? 3 : 0));
  return tensor_ops(ops);
}

}  // namespace

void PauliCorrectionList::conjugate(const Matrix& gate, const std::vector<int>& targets) {
  const int k = static_cast<int>(targets.size());
  std::vector<Bit> xs(k), zs(k);
  for (int i = 0; i < k; ++i) {
    xs[i] = x.at(targets[i]);
    zs[i] = z.at(targets[i]);
  }
  const Matrix image = gate * frame_operator(xs, zs) * gate.adjoint();
  const double d = static_cast<double>(image.rows());
  for (std::uint32_t cand = 0; cand < (1u << (2 * k)); ++cand) {
    for (int i = 0; i < k; ++i) {
      xs[i] = (cand >> (2 * i)) & 1;
      zs[i] = (cand >> (2 * i + 1)) & 1;
    }
    if (std::abs((frame_operator(xs, zs).adjoint() * image).trace()) / d > 1.0 - 1e-9) {
      for (int i = 0; i < k; ++i) {
        x[targets[i]] = xs[i];
        z[targets[i]] = zs[i];
      }
      return;
    }
  }
  throw std::logic_error("gate does not map the Pauli frame to a Pauli");
}

AlicePhase rebit_alice_phase(const AlmostCommutingCircuit& c, const Vector& input, Rng& rng, bool masked,
                             const std::optional<std::vector<Bit>>& masks) {
  AlicePhase out;
  out.state = QuantumState::from_vector(input);
  const int n = c.n;
  if (masked) {
    if (n < 2) throw InvalidCircuit("mask variant needs at least two data qubits");
    if (masks && static_cast<int>(masks->size()) != n - 1) throw std::invalid_argument("one mask bit per held qubit");
    for (int q = 1; q < n; ++q) {
      const Bit mu = masks ? ((*masks)[q - 1] & 1) : rng.bit();
      out.masks.push_back(mu);
      if (mu) apply_gate_inplace(out.state, gates::Ry(kPi), {q});
      out.state.set_owner(q, Party::Bob);
      out.held.push_back(q);
    }
  }
  auto is_held = [&](int q) { return std::find(out.held.begin(), out.held.end(), q) != out.held.end(); };

  QuantumState pair = QuantumState::from_vector(epr_pair());
  pair.set_owner(0, Party::Alice);
  pair.set_owner(1, Party::Bob);
  for (std::size_t li = 0; li < c.layers.size(); ++li) {
    if (const auto* rz = std::get_if<RzLayer>(&c.layers[li])) {
      apply_gate_inplace(out.state, gates::CRy(rz->j * kPi), {rz->qubit, n});
      continue;
    }
    const auto& y = std::get<YdiagLayer>(c.layers[li]);
    for (int i = 0; i < static_cast<int>(y.qubits.size()); ++i) {
      const int q = y.qubits[i];
      if (is_held(q)) continue;
      const int a = out.state.num_qubits();
      QuantumState t = tensor(out.state, pair);
      apply_gate_inplace(t, gates::CiY(), {a, q});
      apply_gate_inplace(t, gates::Ry(kPi / 2), {a});
      Measurement ma = measure(t, Basis::Z, a, rng);
      out.state = remove_qubit(ma.state, a, Basis::Z, ma.outcome);
      out.gadgets.push_back({li, i, q, a, ma.outcome});
    }
  }
  return out;
}

namespace {

RebitRun run_rebit(const AlmostCommutingCircuit& c, const Vector& input, Rng& rng, RebitScheme scheme,
                   const RebitRunOptions& opt) {
  validate_circuit(c, scheme);
  validate_input(input, c.n, scheme);
  const int n = c.n;
  auto transcript = std::make_shared<Transcript>();
  Channel channel(transcript);

  // Alice: gadget halves, phase-qubit rotations, outcome message.
  AlicePhase alice = rebit_alice_phase(c, input, rng, opt.masked, opt.masks);
  BitString outcomes;
  for (const GadgetRecord& g : alice.gadgets) outcomes.push_back(g.m);
  channel.send(Party::Alice, "gadget_outcomes", outcomes);

  // Bob: per layer P / P^dag, frame-dependent Z, joint C, Z measurements.
  const BitString received = channel.receive(Party::Bob, "gadget_outcomes");
  QuantumState s = std::move(alice.state);
  PauliCorrectionList frame(n + 1);
  std::size_t gi = 0;
  for (std::size_t li = 0; li < c.layers.size(); ++li) {
    if (const auto* rz = std::get_if<RzLayer>(&c.layers[li])) {
      frame.conjugate(gates::CRy(rz->j * kPi).matrix(), {rz->qubit, n});
      continue;
    }
    const auto& y = std::get<YdiagLayer>(c.layers[li]);
    std::vector<int> targets(y.qubits.begin(), y.qubits.end());
    std::vector<const GadgetRecord*> layer_gadgets;
    GroupElement mask = 0;
    for (; gi < alice.gadgets.size() && alice.gadgets[gi].layer == li; ++gi) {
      const GadgetRecord& g = alice.gadgets[gi];
      const Bit m = received[gi];
      apply_gate_inplace(s, gates::Pdg(), {g.b_index});
      if ((m ^ 1) ^ (frame.anticommutes_with_y(g.data) ? 1 : 0)) apply_gate_inplace(s, gates::Z(), {g.b_index});
      targets[g.local] = g.b_index;
      mask |= GroupElement{1} << g.local;
      layer_gadgets.push_back(&g);
    }
    apply_gate_inplace(s, Gate("C", build_remote_unitary(ydiag_expand(y.unitary), mask)), targets);
    for (const GadgetRecord* g : layer_gadgets) {
      Measurement mb = measure(s, Basis::Z, g->b_index, rng);
      s = std::move(mb.state);
      if (mb.outcome) frame.flip_y(g->data);
    }
  }

  // Bob: corrections for the data qubits Alice holds, then returns held qubits.
  BitString corrections;
  for (int q = 0; q < n; ++q) {
    if (std::find(alice.held.begin(), alice.held.end(), q) != alice.held.end()) continue;
    corrections.push_back(frame.x[q]);
    corrections.push_back(frame.z[q]);
  }
  channel.send(Party::Bob, "corrections", corrections);
  for (int q : alice.held) s.set_owner(q, Party::Alice);

  // Alice: apply corrections and unmask.
  const BitString fix = channel.receive(Party::Alice, "corrections");
  std::size_t fi = 0;
  PauliCorrectionList residual = frame;
  for (int q = 0; q < n; ++q) {
    if (std::find(alice.held.begin(), alice.held.end(), q) != alice.held.end()) continue;
    const Bit fx = fix[fi++], fz = fix[fi++];
    if (fz) apply_gate_inplace(s, gates::Z(), {q});
    if (fx) apply_gate_inplace(s, gates::X(), {q});
    residual.x[q] ^= fx;
    residual.z[q] ^= fz;
  }
  for (std::size_t i = 0; i < alice.held.size(); ++i)
    if (alice.masks[i]) apply_gate_inplace(s, gates::Ry(kPi), {alice.held[i]});
  // A frame of R_y(pi) on the phase qubit is a global phase of the logical state.
  if (residual.x[n] == residual.z[n]) residual.x[n] = residual.z[n] = 0;

  // Drop Bob's measured halves, highest first.
  for (int q = s.num_qubits() - 1; q > n; --q) {
    const Bit o = outcome_probability(s, Basis::Z, q, 1) > 0.5 ? 1 : 0;
    s = remove_qubit(s, q, Basis::Z, o);
  }

  RebitRun run;
  run.output = s.vector();
  run.transcript = *transcript;
  run.residual = residual;
  run.masks = alice.masks;

  SchemeReport& r = run.report;
  r.scheme = scheme == RebitScheme::One ? (opt.masked ? "scheme1-masked" : "scheme1") : "scheme2";
  r.params["n"] = n;
  r.params["layers"] = c.layers.size();
  r.params["gadgets"] = alice.gadgets.size();
  r.seed = rng.is_tape() ? 0 : rng.seed();
  const Vector want = rebit_decode(strip_global_phase(simulate_physical(c, input)));
  const Vector got = rebit_decode(strip_global_phase(run.output));
  r.add("logical_fidelity", 1.0, fidelity(want, got), 1e-8, Check::AtLeast, "oracle");
  r.add("bob_to_alice_bits", 2.0 * (n - static_cast<int>(alice.held.size())),
        static_cast<double>(comm_audit(run.transcript, Direction::BobToAlice)), 0.0, Check::Equal, "constant");
  r.add("residual_frame", 0.0, residual.is_identity() ? 0.0 : 1.0, 0.0, Check::Equal, "constant");
  return run;
}

}  // namespace

RebitRun run_scheme1(const AlmostCommutingCircuit& c, const Vector& input, Rng& rng, const RebitRunOptions& opt) {
  return run_rebit(c, input, rng, RebitScheme::One, opt);
}

RebitRun run_scheme2(const AlmostCommutingCircuit& c, const Vector& input, Rng& rng) {
  return run_rebit(c, input, rng, RebitScheme::Two, {});
}

RebitRun simplified_mask_variant(const AlmostCommutingCircuit& c, const Vector& input, Rng& rng,
                                 std::optional<std::vector<Bit>> masks) {
  if (c.n < 2) throw InvalidCircuit("mask variant needs at least two data qubits");
  return run_scheme1(c, input, rng, {true, std::move(masks)});
}

}  // namespace qhelab
