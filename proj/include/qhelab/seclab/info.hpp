// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "qhelab/seclab/views.hpp"

namespace qhelab {

// P(outcome | x, s) for Bob's fixed measurement, where s is the vector of
// Alice's basis bits. Inputs and bases are uniform.
struct OutcomeTable {
  int n = 0;
  int basis_bits = 0;
  int outcome_bits = 0;
  std::vector<std::vector<RealVector>> p;  // [x][s]
};

// Pair schemes: Z on first pair qubits, X on second.
OutcomeTable pair_outcome_table(int n, int k, int group);
// Scheme 8: the scheme's own pairing measurement with every coefficient 1;
// controls measured in X, targets in Z. s indexes the basis bits; the t_j
// are averaged out.
OutcomeTable locking_outcome_table(int n, int k);
// Scheme 10: the received bits themselves.
OutcomeTable classical_outcome_table(int n, int k);

OutcomeTable outcome_table(ViewScheme scheme, int n, int k);

// I(X; O) for uniform X.
double table_information(const OutcomeTable& t);
// I(X; O | S).
double table_information_given_bases(const OutcomeTable& t);
// I(X_i; O).
double table_bit_information(const OutcomeTable& t, int i);

// Information about the uniform input under the fixed measurement (Schemes 7, 8).
double cmi_uniform(ViewScheme scheme, int n, int k);

// Closed forms: "k1_exact" n-1+2^-n, "n2_exact" 3/2^k-1/2^{2k},
// "two_bit_lower" n-(2^k-1)(1-(1-2^-k)^n).
double cmi_formula(const std::string& kind, int n, int k);

// Holevo quantity of {(2^-n, view(x))} computed from dense views.
double view_holevo(ViewScheme scheme, int n, int k);

}  // namespace qhelab
