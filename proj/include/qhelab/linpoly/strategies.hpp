// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qhelab/linpoly/pair_schemes.hpp"

namespace qhelab {

// Alice's guesses of Bob's coefficient per pair, in protocol order.
struct AliceStrategyLog {
  struct Guess {
    int i = 0, j = 0;
    Bit a_guess = 0;
  };
  std::vector<Guess> guesses;
};

struct AliceStrategyInfo {
  std::string id;
  std::string description;
};

const std::vector<AliceStrategyInfo>& alice_strategies();

// Hooks for a registered strategy; throws std::invalid_argument for unknown ids.
// "honest": protocol as written, a_i guessed by a fair coin from `coin`.
// "probe": every pair is sent as (|00>+|01>+|10>-|11>)/2; the returned pair's
//   Y(x)Y parity reveals a_i; her share is a_i x_ij with no mask knowledge.
// "learn-recompute": probe, then her share also folds the honest s*d term.
PairHooks make_alice_strategy(const std::string& id, std::shared_ptr<AliceStrategyLog> log,
                              std::shared_ptr<Rng> coin = nullptr);

// The probe pair state.
Vector probe_state();

}  // namespace qhelab
