// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "qhelab/qsim/types.hpp"

namespace qhelab {

// Schemes with an analyzable Bob view.
enum class ViewScheme { Scheme4 = 4, Scheme7 = 7, Scheme8 = 8, Scheme10 = 10 };

ViewScheme view_scheme_from_id(int id);  // throws std::invalid_argument

// Bob's received register averaged exactly over Alice's hidden randomness.
// Pair schemes: after the withheld teleport bits are averaged, each pair is
// diagonal in the basis Z on its first qubit and X on its second, so the view
// is stored as `distribution` over those outcomes (bit 2p is pair p's Z
// outcome, bit 2p + 1 its X outcome; pairs j-major, p = j n + i). Scheme 10's
// view is the distribution of the received bit string, same layout. Scheme 8
// views are dense.
struct BobView {
  ViewScheme scheme = ViewScheme::Scheme4;
  int n = 0, k = 0;
  std::optional<std::vector<Bit>> input;  // empty: uniform over inputs
  int qubits = 0;
  bool diagonal = true;
  RealVector distribution;
  Matrix density;
};

BobView bob_view(ViewScheme scheme, int n, int k, const std::optional<std::vector<Bit>>& input);

// Density matrix of a view; diagonal views are rotated out of the pair frame.
// Capped at 10 qubits.
Matrix view_density(const BobView& v);

double privacy_distance(ViewScheme scheme, int n, int k, const std::vector<Bit>& a, const std::vector<Bit>& b);

// Distance between the views for x_i = 0 and x_i = 1 with the other bits uniform.
double per_bit_distance(ViewScheme scheme, int n, int k, int i);

// Pair-frame outcome distribution for a basis bit shared by `group`
// consecutive variables (1: Scheme 4, n: Scheme 7), built analytically.
RealVector pair_view_distribution(const std::vector<Bit>& x, int k, int group);

// The same view assembled by enumerating every random draw of the actual pair
// encoder and summing the received pure states. Capped at 8 qubits.
Matrix pair_view_dense(const std::vector<Bit>& x, int k, int group);

// Diagonal pair-frame distribution to density matrix.
Matrix pair_frame_density(const RealVector& dist, int pairs);

// Scheme 8 view by enumerating the locking encoder. Capped at 10 qubits.
Matrix locking_view_dense(const std::vector<Bit>& x, int k);

// Scheme 10 view by enumerating the classical protocol's first message.
RealVector classical_view(const std::vector<Bit>& x, int k);

// Marginal of a distribution over n-bit strings onto the listed bits.
RealVector marginal(const RealVector& dist, const std::vector<int>& keep);

// Distance between a pair-scheme view at fixed input and the product of its
// per-variable marginals.
double factorization_gap(const std::vector<Bit>& x, int k, int group);

}  // namespace qhelab
