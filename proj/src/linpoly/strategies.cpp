// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/linpoly/strategies.hpp"

#include <stdexcept>

#include "qhelab/qsim/gates.hpp"
#include "qhelab/qsim/ops.hpp"

namespace qhelab {

const std::vector<AliceStrategyInfo>& alice_strategies() {
  static const std::vector<AliceStrategyInfo> list = {
      {"honest", "follows the protocol; guesses coefficients by a fair coin"},
      {"probe", "probe state in every pair; reads a_i from the Y(x)Y parity, share ignores masks"},
      {"learn-recompute", "probe state in every pair; recomputes a_i x_ij and keeps the s*d fold"},
  };
  return list;
}

Vector probe_state() {
  Vector v(4);
  v << 0.5, 0.5, 0.5, -0.5;
  return v;
}

namespace {

// Outcome of the Y(x)Y parity: 0 for eigenvalue +1.
Bit measure_yy(const QuantumState& pair, Rng& rng) {
  const Matrix yy = tensor_ops({gates::pauli(2), gates::pauli(2)});
  const Matrix rho = pair.to_density();
  const double minus = 0.5 * (1.0 - (rho * yy).trace().real());
  return rng.branch(minus);
}

}  // namespace

PairHooks make_alice_strategy(const std::string& id, std::shared_ptr<AliceStrategyLog> log,
                              std::shared_ptr<Rng> coin) {
  PairHooks hooks;
  if (id == "honest") {
    if (log) {
      if (!coin) coin = std::make_shared<Rng>(0);
      hooks.alice_decode = [log, coin](const PairSecrets& sec, QuantumState&, Bit, Rng&) -> std::optional<Bit> {
        log->guesses.push_back({sec.i, sec.j, coin->bit()});
        return std::nullopt;
      };
    }
    return hooks;
  }
  if (id != "probe" && id != "learn-recompute") throw std::invalid_argument("unknown Alice strategy " + id);
  const bool fold = id == "learn-recompute";
  hooks.alice_encode = [](int, int) -> std::optional<Vector> { return probe_state(); };
  hooks.alice_decode = [log, fold](const PairSecrets& sec, QuantumState& pair, Bit d, Rng& rng) -> std::optional<Bit> {
    // No CNOT leaves Y(x)Y at +1, a CNOT flips it; her withheld Z1, X2 and
    // Bob's leftover sigma_z parity d each flip it once more.
    const Bit parity = measure_yy(pair, rng) ^ sec.withheld_z1 ^ sec.withheld_x2 ^ d;
    const Bit a_guess = parity ^ 1;
    if (log) log->guesses.push_back({sec.i, sec.j, a_guess});
    // The engine adds s*d afterwards; cancel it unless folding it in.
    const Bit share = a_guess & sec.x_split;
    return fold ? share : static_cast<Bit>(share ^ (sec.s & d));
  };
  return hooks;
}

}  // namespace qhelab
