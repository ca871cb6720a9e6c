// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelab/rebit_schemes/circuit.hpp"

namespace qhelab {

// Bob's state after Alice's outcome message, averaged exactly over Alice's
// measurement outcomes (and mask bits in the mask variant). Register order:
// his gadget halves, then held data qubits, then the outcome bits as a
// classical (block-diagonal) register on top.
Matrix rebit_bob_view(const AlmostCommutingCircuit& c, const Vector& input, bool masked = false);

// Bob's view of the held qubits alone in the mask variant, averaged over masks.
Matrix rebit_held_view(const AlmostCommutingCircuit& c, const Vector& input);

}  // namespace qhelab
