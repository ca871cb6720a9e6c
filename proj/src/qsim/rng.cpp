// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/qsim/rng.hpp"

#include <random>
#include <stdexcept>

namespace qhelab {

struct Rng::State {
  std::uint64_t seed = 0;
  std::mt19937_64 engine;
  bool tape_mode = false;
  std::vector<Bit> tape;
  std::size_t cursor = 0;
  std::vector<Bit> drawn;
  double weight = 1.0;

  Bit next_tape_bit() {
    Bit b = cursor < tape.size() ? tape[cursor] : 0;
    ++cursor;
    drawn.push_back(b);
    return b;
  }
};

Rng::Rng(std::uint64_t seed) : s_(std::make_shared<State>()) {
  s_->seed = seed;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  s_->engine.seed(seq);
}

Rng::Rng(std::shared_ptr<State> s) : s_(std::move(s)) {}

Rng Rng::from_tape(std::vector<Bit> tape) {
  auto s = std::make_shared<State>();
  s->tape_mode = true;
  s->tape = std::move(tape);
  return Rng(std::move(s));
}

std::uint64_t Rng::seed() const { return s_->seed; }
bool Rng::is_tape() const { return s_->tape_mode; }

Bit Rng::bit() {
  if (s_->tape_mode) {
    s_->weight *= 0.5;
    return s_->next_tape_bit();
  }
  return static_cast<Bit>(s_->engine() >> 63);
}

Bit Rng::branch(double p1) {
  if (p1 <= 1e-12) return 0;
  if (p1 >= 1.0 - 1e-12) return 1;
  if (s_->tape_mode) {
    Bit b = s_->next_tape_bit();
    s_->weight *= b ? p1 : 1.0 - p1;
    return b;
  }
  return uniform() < p1 ? 1 : 0;
}

std::uint64_t Rng::next_u64() {
  if (s_->tape_mode) {
    std::uint64_t v = 0;
    for (int i = 0; i < 64; ++i) v = (v << 1) | bit();
    return v;
  }
  return s_->engine();
}

double Rng::uniform() {
  if (s_->tape_mode) throw std::logic_error("uniform draw from a tape-backed rng");
  return std::uniform_real_distribution<double>(0.0, 1.0)(s_->engine);
}

double Rng::normal() {
  if (s_->tape_mode) throw std::logic_error("normal draw from a tape-backed rng");
  return std::normal_distribution<double>(0.0, 1.0)(s_->engine);
}

int Rng::uniform_int(int lo, int hi) {
  if (s_->tape_mode) throw std::logic_error("integer draw from a tape-backed rng");
  return std::uniform_int_distribution<int>(lo, hi)(s_->engine);
}

Rng Rng::split() {
  if (s_->tape_mode) return Rng(s_);
  std::uint64_t child = s_->engine();
  Rng r(child);
  return r;
}

double Rng::weight() const { return s_->weight; }
const std::vector<Bit>& Rng::drawn() const { return s_->drawn; }

std::size_t enumerate_tapes(const std::function<void(Rng&)>& fn, std::size_t max_leaves) {
  std::vector<Bit> tape;
  std::size_t leaves = 0;
  for (;;) {
    Rng r = Rng::from_tape(tape);
    fn(r);
    if (++leaves > max_leaves) throw std::length_error("draw tree exceeds leaf budget");
    std::vector<Bit> used = r.drawn();
    int i = static_cast<int>(used.size()) - 1;
    while (i >= 0 && used[i] == 1) --i;
    if (i < 0) break;
    used.resize(i + 1);
    used[i] = 1;
    tape = std::move(used);
  }
  return leaves;
}

}  // namespace qhelab
