// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "qhelab/qsim/rng.hpp"
#include "qhelab/qsim/types.hpp"

namespace qhelab {

// Element of C_2^K; bit i belongs to local qubit i. The group law is XOR.
using GroupElement = std::uint32_t;

struct YDiagExpansion {
  int K = 0;
  std::vector<Complex> c;  // indexed by GroupElement

  Complex operator()(GroupElement f) const { return c.at(f); }
};

// V(f): sigma_y on every qubit whose bit is set in f.
Matrix y_string(GroupElement f, int K);
// Columns are tensor products of |y+> = (|0>+i|1>)/sqrt2 and |y-> = (|0>-i|1>)/sqrt2.
Matrix y_basis(int K);

bool is_y_diagonal(const Matrix& u, double tol = 1e-9);
bool is_real(const Matrix& u, double tol = 1e-9);

// c(f) = 2^-K Tr(V(f)^dag U). Throws std::invalid_argument unless U is Y-diagonal.
YDiagExpansion ydiag_expand(const Matrix& u);
Matrix reconstruct(const YDiagExpansion& e);

// C[g][f] = c(g XOR f). Throws std::domain_error if C is not unitary.
Matrix build_c_matrix(const YDiagExpansion& e);

// Mixed remote unitary: local positions in `gadget` are gadget qubits
// (C-style indexing), the others are data qubits Bob holds directly.
// gadget = all ones gives C; gadget = 0 gives U.
Matrix build_remote_unitary(const YDiagExpansion& e, GroupElement gadget);

// Random real Y-diagonal unitary: Y-basis phases with phi(~b) = -phi(b).
Matrix random_real_ydiag(int K, Rng& rng);
// cos(t) I^{x3} + sin(t) R_y(pi)^{x3}.
Matrix ydiag_triple(double theta);

}  // namespace qhelab
