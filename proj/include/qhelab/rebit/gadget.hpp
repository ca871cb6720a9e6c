// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelab/qsim/ops.hpp"

namespace qhelab {

struct GadgetTarget {
  enum class Mode { QuarterTurn, TY };
  Mode mode = Mode::QuarterTurn;
  int quarter_turns = 0;  // G = R_y(k pi/2), k in 0..3

  static GadgetTarget quarter(int k);
  static GadgetTarget ty();
  Matrix matrix() const;
};

struct GadgetOutcome {
  Bit m = 0;      // Alice's outcome
  Bit s = 0;      // Bob's outcome
  Bit r = 0;      // output is R_y(pi)^r G |psi>
  int bob_j = 0;  // Bob rotated his half by R_y(j pi/4)
};

// Bob's rotation index given Alice's outcome.
int gadget_bob_rotation(const GadgetTarget& g, Bit m);
// Frozen correction table r(m, s) per target.
Bit gadget_correction(const GadgetTarget& g, Bit m, Bit s);

// Literal two-party gadget on a real data qubit. The EPR pair is allocated
// above the register and removed afterwards; the correction is not applied.
GadgetOutcome uncertain_gadget(QuantumState& s, int data_qubit, const GadgetTarget& g, Rng& rng);

struct RzGadgetOutcome {
  GadgetOutcome inner;
  // Physical gate on (data, phase) to undo when inner.r == 1.
  Matrix residual;
};

// Logical R_z(k pi/2) on a rebit register, composed from fixed R_x(+-pi/2)
// sequences around the uncertain R_y gadget.
RzGadgetOutcome uncertain_rz_gadget(QuantumState& s, int data_qubit, int phase_qubit, int k, Rng& rng);

}  // namespace qhelab
