// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "qhelab/harness/report.hpp"
#include "qhelab/harness/transcript.hpp"
#include "qhelab/linpoly/pair_schemes.hpp"
#include "qhelab/qhe/garden_hose.hpp"
#include "qhelab/qhe/keys.hpp"

namespace qhelab {

struct TGateAudit {
  int qubit = 0;
  Bit p = 0;  // Bob's share
  Bit q = 0;  // Alice's share
  Bit needed = 0;  // true f_a value, omniscient
  Bit applied_pdg = 0;
  HoseOutput position = HoseOutput::Out1;
};

// State shared across the steps of one interactive run. Bob holds `state`;
// Alice's variable values are hers alone; the session is the simulator's
// omniscient bookkeeping.
struct QheSession {
  QuantumState state;
  PauliKeyPolynomial keys;
  std::vector<Bit> alice_vars;
  Channel channel;
  int k = 1;
  int uses = 0;
  int instances = 0;
  bool literal_hose = false;
  PairHooks alice_hooks;
  std::vector<TGateAudit> audit;
};

// Lower-level instance in distributed mode for one key form; returns
// (Alice's share, Bob's share).
DistributedBit key_instance(QheSession& s, const F2Form& form, const std::string& tag, Rng& rng);

// Bob applies T, the parties evaluate P^{f_a} by a lower-level instance,
// and the garden hose consumes the shares.
void t_gate_step(QheSession& s, int qubit, Rng& rng);

// Soundness probe: evaluates every key at Alice's true values, undoes it on a
// copy of Bob's register and returns the fidelity with `ideal`.
double key_soundness(const QheSession& s, const Vector& ideal);

struct QheRun {
  Vector output;
  Transcript transcript;
  SchemeReport report;
  int instances = 0;
  int variables = 0;
  double min_soundness = 1.0;
  std::vector<TGateAudit> audit;
};

struct Scheme5Options {
  bool literal_hose = false;
  bool track_soundness = true;
  PairHooks alice_hooks;
};

// A Bob-prepared qubit that must end in Z eigenstate |eigen>.
struct TrapCheck {
  int qubit = 0;
  Bit eigen = 0;
};

struct QheCoreResult {
  QheRun run;
  bool aborted = false;
  int failing_trap = -1;
};

// Shared engine. The first `data_qubits` register qubits are Alice's and are
// encrypted; the rest belong to Bob. Traps are measured and checked after the
// last gate, before the return teleport.
QheCoreResult run_qhe_core(const CliffordTCircuit& c, int data_qubits, const Vector& input, int k, Rng& rng,
                           const Scheme5Options& opt, const std::vector<TrapCheck>& traps, const std::string& name);

// Caps: n <= 3 and at most 3 T gates.
QheRun run_scheme5(const CliffordTCircuit& c, const Vector& input, int k, Rng& rng, const Scheme5Options& opt = {});

// Direct simulation of a Clifford+T circuit.
Vector simulate_clifford_t(const CliffordTCircuit& c, const Vector& input);

}  // namespace qhelab
