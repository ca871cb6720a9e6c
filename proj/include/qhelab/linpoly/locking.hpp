// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelab/harness/transcript.hpp"
#include "qhelab/linpoly/polynomial.hpp"
#include "qhelab/qsim/rng.hpp"
#include "qhelab/qsim/state.hpp"

namespace qhelab {

// Data-holder side of the locking scheme before the coefficient holder acts.
struct LockingPreparation {
  std::vector<std::vector<Bit>> x_split;  // [i][j]
  std::vector<Bit> s, t;                  // per j
  // One register per j: qubit i encodes x_ij, qubit n encodes t_j.
  std::vector<QuantumState> blocks;
};

LockingPreparation prepare_locking(const std::vector<Bit>& x, int k, Rng& rng);

// The coefficient holder's side after acting on block j: qubits of the
// variables with a_i = 1 are paired in ascending i (smaller index controls);
// an unpaired qubit controls a CNOT onto the t_j qubit. X-basis results of the
// controls XOR into u_j, Z-basis results of the targets into v_j.
struct LockingMeasurement {
  Bit u = 0, v = 0;
};
LockingMeasurement locking_measure(QuantumState& block, const std::vector<Bit>& a, Rng& rng);

// Halfway state: the coefficient holder knows R_j, w, and u_j, and the data
// holder has sent nothing further.
struct LockingHalf {
  LockingPreparation prep;
  std::vector<Bit> r;  // R_j
  std::vector<Bit> u;  // u_j
  Bit w = 0;
};

// Runs the locking scheme with `data` holding x and the other party holding
// (a, c). Everything up to the coefficient holder's first message.
LockingHalf locking_first_half(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng,
                               Channel& channel, Party data);

// Data holder's local value sum_j ((1 ^ s_j) R_j ^ t_j w).
Bit locking_local_value(const LockingPreparation& prep, const std::vector<Bit>& r, Bit w);

LinpolyRun run_scheme8(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng,
                       bool distributed = false);
LinpolyRun run_locking(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng, bool distributed,
                       Channel channel, Party data);

// Outer locking instance with k = ceil(gamma n); the data holder's local
// evaluation is replaced by a role-reversed inner instance with k_prime.
int scheme9_outer_k(int n, double gamma);
LinpolyRun run_scheme9(const std::vector<Bit>& x, const LinearPolynomial& p, double gamma, int k_prime, Rng& rng,
                       bool distributed = false);

// sum_i a_i x_i mod 2 by one locking instance with k = 1, c = 0.
Bit inner_product_demo(const std::vector<Bit>& x, const std::vector<Bit>& a, Rng& rng);

}  // namespace qhelab
