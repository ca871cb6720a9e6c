// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "qhelab/qhe/scheme5.hpp"

namespace qhelab {

// One trap: a qubit in Z eigenstate |e> run through
// CNOT(t->d) T CNOT(t->d) H T T P P P H, which returns it to |e> for any data.
struct TrapPlan {
  int qubit = 0;        // register index, above the data qubits
  int data = 0;         // data qubit in the CNOT sandwich
  Bit eigen = 0;        // e
  std::size_t insert = 0;  // position in the data gate list
};

std::vector<CliffordTGate> trap_sequence(int trap, int data);

struct Scheme6Run {
  bool aborted = false;
  int failing_trap = -1;
  QheRun run;  // output valid only when not aborted
  std::vector<TrapPlan> traps;
};

// alice_behavior: "honest" or a registered strategy id.
Scheme6Run run_scheme6(const CliffordTCircuit& c, const Vector& input, int k, int traps, Rng& rng,
                       const std::string& alice_behavior = "honest");

}  // namespace qhelab
