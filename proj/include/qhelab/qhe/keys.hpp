// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qhelab/qsim/types.hpp"

namespace qhelab {

// Linear form over F2: constant + sum coef[v] * var[v].
struct F2Form {
  std::vector<Bit> coef;
  Bit constant = 0;

  F2Form() = default;
  explicit F2Form(int vars) : coef(vars, 0) {}
  static F2Form variable(int vars, int v);
  Bit eval(const std::vector<Bit>& values) const;
  F2Form& operator^=(const F2Form& o);
  friend F2Form operator^(F2Form a, const F2Form& b) { return a ^= b; }
  F2Form scaled(Bit b) const;  // b * form
  bool depends_on_any(int first, int last) const;  // any nonzero coef in [first, last)
  friend bool operator==(const F2Form&, const F2Form&) = default;
};

// Per-qubit keys X^{f_a} Z^{f_b}. Variable layout: a_i at i, b_i at n + i,
// then 4 Bell-outcome bits per garden-hose use r at 2n + 4r + {0..3}.
// Qubits beyond the n encrypted ones (traps) start with constant-zero keys.
struct PauliKeyPolynomial {
  int n = 0;       // encrypted qubits
  int qubits = 0;  // all tracked qubits
  int uses = 0;    // garden-hose uses provisioned
  std::vector<F2Form> fa, fb;

  static PauliKeyPolynomial initial(int n, int qubits, int uses);
  int variable_count() const { return 2 * n + 4 * uses; }
  int bell_variable(int use, int slot) const { return 2 * n + 4 * use + slot; }
};

struct CliffordTGate {
  std::string gate;  // h, p, cnot, t, x, y, z
  std::vector<int> targets;
  friend bool operator==(const CliffordTGate&, const CliffordTGate&) = default;
};

struct CliffordTCircuit {
  int n = 0;
  std::vector<CliffordTGate> gates;
  int t_count() const;
  void validate() const;
};

CliffordTCircuit clifford_t_from_json(const nlohmann::json& j);
nlohmann::json clifford_t_to_json(const CliffordTCircuit& c);

// Matrix of a circuit gate; used for direct simulation.
Matrix clifford_t_matrix(const CliffordTGate& g);

// Moves the key through a Clifford or Pauli gate by editing Bob's forms.
// Throws std::invalid_argument for T.
void effective_key_update(PauliKeyPolynomial& keys, const CliffordTGate& g);

// Random circuit over {h, p, cnot, x, z} with exactly `t_gates` T gates.
class Rng;
CliffordTCircuit random_clifford_t(int n, int t_gates, int cliffords, Rng& rng);

}  // namespace qhelab
