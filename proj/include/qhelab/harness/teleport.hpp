// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "qhelab/harness/bits.hpp"
#include "qhelab/qsim/ops.hpp"

namespace qhelab {

enum MaskBits : unsigned { kMaskX = 1u, kMaskZ = 2u, kMaskBoth = 3u };

// Each correction bit must be either withheld or disclosed, never both.
struct TeleportMask {
  unsigned withheld = 0;
  unsigned disclosed = kMaskBoth;

  static TeleportMask withholding(unsigned bits) { return {bits, kMaskBoth & ~bits}; }
  void validate() const;
};

struct TeleportRecord {
  int qubit = 0;
  Party sender = Party::Alice;
  Party receiver = Party::Bob;
  TeleportMask mask;
  // Disclosed correction bits, x before z.
  BitString disclosed;
  // (a, b): the receiver holds X^a Z^b |psi>.
  Secret<std::array<Bit, 2>> actual{Party::Alice, {0, 0}};

  Bit disclosed_x() const;
  Bit disclosed_z() const;
};

// Channel shortcut: apply X^a Z^b with fresh uniform a, b and relabel the owner.
TeleportRecord teleport_symbolic(QuantumState& s, int qubit, TeleportMask mask, Rng& rng);

// Literal EPR teleportation; the output stays at the same register index.
TeleportRecord teleport_literal(QuantumState& s, int qubit, TeleportMask mask, Rng& rng);

// Receiver side: undo only the disclosed part of the mask.
void apply_disclosed_corrections(QuantumState& s, const TeleportRecord& rec);

// Undo X^a Z^b on a qubit.
void apply_pauli_correction(QuantumState& s, int qubit, Bit x, Bit z);

}  // namespace qhelab
