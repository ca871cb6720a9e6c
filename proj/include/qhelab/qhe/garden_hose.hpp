// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "qhelab/qsim/rng.hpp"
#include "qhelab/qsim/state.hpp"

namespace qhelab {

enum class HoseOutput { Out1, Out2 };

// Output = X^x Z^z (P^dag)^{p ^ q} |in>, up to a global phase.
struct GardenHoseResult {
  HoseOutput position = HoseOutput::Out1;
  // Alice's Bell outcomes (x, z) on pairs (E2, E0) then (E1, E-1).
  std::array<Bit, 4> alice_bits{};
  // Bob's Bell outcome (x, z) joining "in" to E2 (p = 0) or E1 (p = 1).
  std::array<Bit, 2> bob_bits{};
  Bit x = 0, z = 0;
  Bit applied_pdg = 0;
};

// Literal gadget: four EPR pairs E2, E1, E0, E-1 with Bob's halves at out
// positions; Bob joins "in" to E2 or E1 by p; Alice applies P^dag to E1 (q=0)
// or E2 (q=1) and always Bell-measures (E2, E0) and (E1, E-1). The output
// (E0 for p=0, E-1 for p=1) replaces the input at its register index; the
// idle pair is discarded.
GardenHoseResult garden_hose_literal(QuantumState& s, int qubit, Bit p, Bit q, Rng& rng);

// Contract mode: same output law with the Bell outcomes drawn uniformly.
GardenHoseResult garden_hose_contract(QuantumState& s, int qubit, Bit p, Bit q, Rng& rng);

}  // namespace qhelab
