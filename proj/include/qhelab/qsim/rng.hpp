// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "qhelab/qsim/types.hpp"

namespace qhelab {

// Splittable seeded generator. A tape-backed instance replays a fixed bit
// sequence instead; enumerate_tapes() uses that to walk every branch of a
// randomized procedure exactly, with weight() giving the branch probability.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static Rng from_tape(std::vector<Bit> tape);

  std::uint64_t seed() const;
  bool is_tape() const;

  // Fair coin.
  Bit bit();
  // Born-rule branch: returns 1 with probability p1. Deterministic branches
  // (p1 within 1e-12 of 0 or 1) consume nothing.
  Bit branch(double p1);
  std::uint64_t next_u64();
  // Sampling-only draws; a tape instance throws.
  double uniform();
  double normal();
  int uniform_int(int lo, int hi);

  // Independent child stream. Tape instances share their cursor.
  Rng split();

  double weight() const;
  const std::vector<Bit>& drawn() const;

 private:
  struct State;
  explicit Rng(std::shared_ptr<State> s);
  std::shared_ptr<State> s_;
};

// Runs fn once per leaf of the draw tree. Returns the leaf count.
std::size_t enumerate_tapes(const std::function<void(Rng&)>& fn,
                            std::size_t max_leaves = std::size_t{1} << 22);

}  // namespace qhelab
