// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qhelab/qsim/ops.hpp"

namespace qhelab {

// (a+bi)|x> -> a|x>|R> + b|x>|I>, with |R>=|0>, |I>=|1> on a new highest qubit.
Vector rebit_encode(const Vector& psi);
// Throws std::domain_error if any amplitude has an imaginary part above tol.
Vector rebit_decode(const Vector& physical, double tol = 1e-9);

// Multiplies by the conjugate phase of the largest amplitude so a real
// vector that picked up a global phase becomes real again.
Vector strip_global_phase(const Vector& v);

struct LogicalGate {
  std::string name;  // "rz", "ry", "f" or "id"
  double theta = 0.0;
  std::vector<int> qubits;
};

struct PhysicalGate {
  Gate gate;
  std::vector<int> targets;
};

class UnsupportedGate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// R_z(t) -> controlled-R_y(2t) from the data qubit onto the phase qubit;
// R_y and F(pi/2) map to themselves; the identity maps to nothing.
std::vector<PhysicalGate> translate_logical_gate(const LogicalGate& g, int phase_qubit);

void apply_physical(QuantumState& s, const std::vector<PhysicalGate>& seq);

}  // namespace qhelab
