// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qhelab/qhe/keys.hpp"
#include "qhelab/qsim/rng.hpp"

namespace qhelab {

struct AdversaryStrategy {
  Party party = Party::Alice;
  std::string id;
  std::string description;
};

// Every registered strategy for both parties.
std::vector<AdversaryStrategy> adversary_strategies();

struct RateCount {
  std::size_t successes = 0;
  std::size_t trials = 0;
  double rate() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0; }
};

struct BobAttack {
  double guess_rate = 0.0;  // exact, per variable, optimal guess from the fixed measurement
  RateCount errors;         // evaluation errors after measuring and continuing
};

// Scheme 4 or 7 with n variables: Bob measures every pair (Z first, X second)
// before continuing honestly. Random x, a, c per trial.
BobAttack cheating_bob(int scheme, int n, int k, std::size_t trials, Rng& rng);

struct AliceAttack {
  RateCount identified;  // per-pair guesses of a_i that were right
  RateCount errors;      // distributed outcomes that were wrong
};

// Scheme 4 or 7 in distributed mode with a registered Alice strategy.
AliceAttack cheating_alice(int scheme, const std::string& strategy, int n, int k, std::size_t trials, Rng& rng);

struct TrapAttack {
  RateCount aborts;
};

// Scheme 6 abort rate for a behavior over random inputs of `circuit`.
TrapAttack trap_detection(const CliffordTCircuit& circuit, int k, int traps, const std::string& behavior,
                          std::size_t trials, Rng& rng);

}  // namespace qhelab
