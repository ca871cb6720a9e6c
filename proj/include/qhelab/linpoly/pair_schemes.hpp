// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>

#include "qhelab/harness/transcript.hpp"
#include "qhelab/linpoly/polynomial.hpp"
#include "qhelab/qsim/rng.hpp"
#include "qhelab/qsim/state.hpp"

namespace qhelab {

// What Alice knows about one pair when she decodes it.
struct PairSecrets {
  int i = 0, j = 0;
  Bit x_split = 0;
  Bit s = 0;
  Bit withheld_z1 = 0;  // Z correction on the first qubit, never disclosed
  Bit withheld_x2 = 0;  // X correction on the second qubit, never disclosed
  Bit t = 0;            // withheld_x2 if s = 0, else withheld_z1
};

// Adversary hooks. Each only sees its own party's data.
struct PairHooks {
  // Alice: replaces the honest encoding of pair (i, j).
  std::function<std::optional<Vector>(int i, int j)> alice_encode;
  // Alice: replaces the honest decoding; returns the pair's contribution,
  // the quantity an honest Alice gets as o1 ^ o2 ^ t.
  std::function<std::optional<Bit>(const PairSecrets& sec, QuantumState& pair, Bit group_parity, Rng& rng)>
      alice_decode;
  // Bob: acts on a received pair (disclosed corrections already undone)
  // before his CNOT step.
  std::function<void(int i, int j, QuantumState& pair, Rng& rng)> bob_tamper;
};

// Bob's received pair for honest Alice, disclosed corrections undone.
struct PreparedPair {
  PairSecrets secrets;
  QuantumState state;
};

// Step 2 of the pair schemes for all (i, j): splitting, encoding with basis
// bits shared inside groups of `group` consecutive variables, and teleport
// with Z withheld on the first qubit and X on the second. Pairs are ordered
// j-major: index j * n + i.
std::vector<PreparedPair> prepare_pairs(const std::vector<Bit>& x, int k, int group, Rng& rng,
                                        const PairHooks& hooks = {}, BitString* disclosed = nullptr);

// Pair-scheme engine. group = 1 is the per-bit pad scheme, group = n the
// shared-basis variant; values in between share a basis bit among `group`
// consecutive variables for each j.
LinpolyRun run_pair_scheme(const std::vector<Bit>& x, const LinearPolynomial& p, int k, int group, Rng& rng,
                           bool distributed, Channel channel, const PairHooks& hooks = {});

LinpolyRun run_scheme4(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng,
                       bool distributed = false, const PairHooks& hooks = {});
LinpolyRun run_scheme7(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng,
                       bool distributed = false, const PairHooks& hooks = {});

}  // namespace qhelab
