// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/qhe/scheme5.hpp"

#include <algorithm>
#include <stdexcept>

#include "qhelab/harness/teleport.hpp"
#include "qhelab/qsim/gates.hpp"
#include "qhelab/qsim/ops.hpp"

namespace qhelab {

namespace {

constexpr int kMaxDataQubits = 3;
constexpr int kMaxTGates = 3;

bool is_virtual_pauli(const std::string& g) { return g == "x" || g == "y" || g == "z"; }

void apply_circuit_gate(Vector& psi, int n, const CliffordTGate& g) {
  apply_matrix(psi, n, clifford_t_matrix(g), g.targets);
}

}  // namespace

Vector simulate_clifford_t(const CliffordTCircuit& c, const Vector& input) {
  c.validate();
  if (input.size() != (Eigen::Index{1} << c.n)) throw std::invalid_argument("input dimension does not match circuit");
  Vector psi = input;
  for (const CliffordTGate& g : c.gates) apply_circuit_gate(psi, c.n, g);
  return psi;
}

DistributedBit key_instance(QheSession& s, const F2Form& form, const std::string& tag, Rng& rng) {
  LinearPolynomial p{static_cast<int>(form.coef.size()), form.coef, form.constant};
  ++s.instances;
  return run_pair_scheme(s.alice_vars, p, s.k, 1, rng, true, s.channel.scoped(tag), s.alice_hooks).shares;
}

void t_gate_step(QheSession& s, int qubit, Rng& rng) {
  if (qubit < 0 || qubit >= s.keys.qubits) throw std::out_of_range("qubit index out of range");
  const int use = s.uses;
  if (use >= s.keys.uses) throw std::logic_error("more T gates than provisioned variables");

  apply_gate_inplace(s.state, gates::T(), {qubit});
  const F2Form fa = s.keys.fa[qubit];
  const DistributedBit shares = key_instance(s, fa, "t" + std::to_string(use), rng);
  const Bit q = shares.alice_bit, p = shares.bob_bit;

  TGateAudit audit{qubit, p, q, fa.eval(s.alice_vars), 0, HoseOutput::Out1};
  const GardenHoseResult hose = s.literal_hose ? garden_hose_literal(s.state, qubit, p, q, rng)
                                               : garden_hose_contract(s.state, qubit, p, q, rng);
  audit.applied_pdg = hose.applied_pdg;
  audit.position = hose.position;

  // Alice records all four Bell bits; Bob's path picks which pair is live.
  const int vars = s.keys.variable_count();
  for (int slot = 0; slot < 4; ++slot) s.alice_vars[s.keys.bell_variable(use, slot)] = hose.alice_bits[slot];
  const Bit bx = hose.bob_bits[0], bz = hose.bob_bits[1];
  F2Form& ka = s.keys.fa[qubit];
  F2Form& kb = s.keys.fb[qubit];
  ka ^= F2Form::variable(vars, s.keys.bell_variable(use, 2 * p));
  ka.constant ^= bx;
  kb ^= F2Form::variable(vars, s.keys.bell_variable(use, 2 * p + 1));
  kb.constant ^= bz;
  kb ^= fa.scaled(bx);

  s.audit.push_back(audit);
  ++s.uses;
}

double key_soundness(const QheSession& s, const Vector& ideal) {
  QuantumState probe = s.state;
  for (int q = 0; q < s.keys.qubits; ++q)
    apply_pauli_correction(probe, q, s.keys.fa[q].eval(s.alice_vars), s.keys.fb[q].eval(s.alice_vars));
  return fidelity(probe.vector(), ideal);
}

QheCoreResult run_qhe_core(const CliffordTCircuit& c, int data_qubits, const Vector& input, int k, Rng& rng,
                           const Scheme5Options& opt, const std::vector<TrapCheck>& traps, const std::string& name) {
  c.validate();
  const int n = data_qubits;
  if (n < 1 || n > c.n) throw std::invalid_argument("data qubit count out of range");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (input.size() != (Eigen::Index{1} << c.n)) throw std::invalid_argument("input dimension does not match circuit");
  const int R = c.t_count();

  QheSession s;
  s.state = QuantumState::from_vector(input);
  s.state.validate();
  for (int q = 0; q < c.n; ++q) s.state.set_owner(q, q < n ? Party::Alice : Party::Bob);
  s.keys = PauliKeyPolynomial::initial(n, c.n, R);
  s.alice_vars.assign(s.keys.variable_count(), 0);
  s.k = k;
  s.literal_hose = opt.literal_hose;
  s.alice_hooks = opt.alice_hooks;

  // Step 1: Alice teleports her qubits, withholding both correction bits.
  for (int i = 0; i < n; ++i) {
    TeleportRecord rec = teleport_symbolic(s.state, i, TeleportMask::withholding(kMaskBoth), rng);
    const auto& ab = rec.actual.reveal(Party::Alice);
    s.alice_vars[i] = ab[0];
    s.alice_vars[n + i] = ab[1];
  }

  QheCoreResult out;
  QheRun& run = out.run;
  Vector ideal = input;
  auto track = [&] {
    if (opt.track_soundness) run.min_soundness = std::min(run.min_soundness, key_soundness(s, ideal));
  };
  track();

  // Step 2: Cliffords move the keys, T gates go through the correction gadget.
  for (const CliffordTGate& g : c.gates) {
    if (g.gate == "t") {
      t_gate_step(s, g.targets[0], rng);
    } else {
      effective_key_update(s.keys, g);
      if (!is_virtual_pauli(g.gate)) apply_gate_inplace(s.state, Gate(g.gate, clifford_t_matrix(g)), g.targets);
    }
    apply_circuit_gate(ideal, c.n, g);
    track();
  }

  // Trap checkpoints: Bob measures, Alice reveals her share of the trap's X key.
  for (std::size_t t = 0; t < traps.size(); ++t) {
    const TrapCheck& trap = traps[t];
    const F2Form& fa = s.keys.fa[trap.qubit];
    if (fa.depends_on_any(0, 2 * n)) throw std::logic_error("trap key depends on data keys");
    Channel ch = s.channel.scoped("check" + std::to_string(t));
    const DistributedBit shares = key_instance(s, fa, "check" + std::to_string(t), rng);
    ch.send(Party::Alice, "share", BitString{shares.alice_bit});
    const Bit alice_share = ch.receive(Party::Bob, "share")[0];
    Measurement m = measure(s.state, Basis::Z, trap.qubit, rng);
    s.state = std::move(m.state);
    if ((m.outcome ^ alice_share ^ shares.bob_bit) != trap.eigen && out.failing_trap < 0) {
      out.aborted = true;
      out.failing_trap = static_cast<int>(t);
    }
  }
  if (out.aborted) {
    run.transcript = s.channel.transcript();
    run.instances = s.instances;
    run.variables = s.keys.variable_count();
    run.audit = s.audit;
    run.report.scheme = name;
    run.report.add("aborted", 1, 1, 0, Check::Report, "trap");
    return out;
  }

  // Discard Bob's trap qubits; ideally each is back in |eigen>.
  std::vector<TrapCheck> order = traps;
  std::sort(order.begin(), order.end(), [](const TrapCheck& a, const TrapCheck& b) { return a.qubit > b.qubit; });
  QuantumState ideal_state = QuantumState::from_vector(ideal);
  for (const TrapCheck& trap : order) {
    const Bit o = outcome_probability(s.state, Basis::Z, trap.qubit, 1) > 0.5 ? 1 : 0;
    s.state = remove_qubit(s.state, trap.qubit, Basis::Z, o);
    ideal_state = remove_qubit(ideal_state, trap.qubit, Basis::Z, trap.eigen);
  }

  // Step 3: Bob returns the data qubits, withholding both bits.
  std::vector<std::array<Bit, 2>> beta(n);
  for (int i = 0; i < n; ++i) {
    TeleportRecord rec = teleport_symbolic(s.state, i, TeleportMask::withholding(kMaskBoth), rng);
    beta[i] = rec.actual.reveal(Party::Bob);
  }

  // Step 4: one instance per final key bit; Bob folds his return bit into his share.
  for (int i = 0; i < n; ++i) {
    Bit key[2];
    for (int w = 0; w < 2; ++w) {
      const std::string tag = "final" + std::to_string(i) + (w ? "z" : "x");
      const DistributedBit shares = key_instance(s, w ? s.keys.fb[i] : s.keys.fa[i], tag, rng);
      Channel ch = s.channel.scoped(tag);
      ch.send(Party::Bob, "fold", BitString{static_cast<Bit>(shares.bob_bit ^ beta[i][w])});
      key[w] = shares.alice_bit ^ ch.receive(Party::Alice, "fold")[0];
    }
    // Step 5.
    apply_pauli_correction(s.state, i, key[0], key[1]);
  }

  run.output = s.state.vector();
  run.transcript = s.channel.transcript();
  run.instances = s.instances;
  run.variables = s.keys.variable_count();
  run.audit = s.audit;

  SchemeReport& rep = run.report;
  rep.scheme = name;
  rep.params["n"] = n;
  rep.params["k"] = k;
  rep.params["t_gates"] = R;
  rep.params["traps"] = static_cast<int>(traps.size());
  rep.seed = rng.is_tape() ? 0 : rng.seed();
  rep.add("output_fidelity", 1.0, fidelity(run.output, ideal_state.vector()), 1e-8, Check::AtLeast, "oracle");
  rep.add("lower_level_instances", 2 * n + R + static_cast<int>(traps.size()), run.instances, 0, Check::Equal,
          "count");
  rep.add("key_variables", 2 * n + 4 * R, run.variables, 0, Check::Equal, "count");
  if (opt.track_soundness) rep.add("min_key_soundness", 1.0, run.min_soundness, 1e-8, Check::AtLeast, "oracle");
  rep.add("alice_to_bob_bits", 0, static_cast<double>(comm_audit(run.transcript, Direction::AliceToBob)), 0,
          Check::Report, "count");
  rep.add("bob_to_alice_bits", 0, static_cast<double>(comm_audit(run.transcript, Direction::BobToAlice)), 0,
          Check::Report, "count");
  return out;
}

QheRun run_scheme5(const CliffordTCircuit& c, const Vector& input, int k, Rng& rng, const Scheme5Options& opt) {
  c.validate();
  if (c.n > kMaxDataQubits) throw std::invalid_argument("at most 3 qubits");
  if (c.t_count() > kMaxTGates) throw std::invalid_argument("at most 3 T gates");
  return run_qhe_core(c, c.n, input, k, rng, opt, {}, "scheme5").run;
}

}  // namespace qhelab
