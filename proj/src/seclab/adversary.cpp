// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/seclab/adversary.hpp"

#include <memory>
#include <stdexcept>

#include "qhelab/linpoly/pair_schemes.hpp"
#include "qhelab/linpoly/strategies.hpp"
#include "qhelab/qhe/scheme6.hpp"
#include "qhelab/qsim/ops.hpp"
#include "qhelab/seclab/views.hpp"

namespace qhelab {

std::vector<AdversaryStrategy> adversary_strategies() {
  std::vector<AdversaryStrategy> out;
  for (const AliceStrategyInfo& s : alice_strategies()) out.push_back({Party::Alice, s.id, s.description});
  out.push_back({Party::Bob, "honest", "follows the protocol"});
  out.push_back({Party::Bob, "measure-zx",
                 "measures each received pair, Z on the first qubit and X on the second, then continues"});
  return out;
}

namespace {

int group_for(int scheme, int n) {
  if (scheme == 4) return 1;
  if (scheme == 7) return n;
  throw std::invalid_argument("adversary bench covers schemes 4 and 7");
}

LinearPolynomial random_polynomial(int n, Rng& rng) {
  LinearPolynomial p = LinearPolynomial::zero(n);
  for (Bit& a : p.a) a = rng.bit();
  p.c = rng.bit();
  return p;
}

std::vector<Bit> random_bits(int n, Rng& rng) {
  std::vector<Bit> x(n);
  for (Bit& b : x) b = rng.bit();
  return x;
}

}  // namespace

BobAttack cheating_bob(int scheme, int n, int k, std::size_t trials, Rng& rng) {
  const int group = group_for(scheme, n);
  BobAttack out;
  // Under the fixed measurement the view is the outcome law itself, so the
  // best guess succeeds with 1/2 + TD/2.
  out.guess_rate = 0.5 + 0.5 * per_bit_distance(view_scheme_from_id(scheme), n, k, 0);
  PairHooks hooks;
  hooks.bob_tamper = [](int, int, QuantumState& pair, Rng& r) {
    pair = measure(pair, Basis::Z, 0, r).state;
    pair = measure(pair, Basis::X, 1, r).state;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const std::vector<Bit> x = random_bits(n, rng);
    const LinearPolynomial p = random_polynomial(n, rng);
    const LinpolyRun run = run_pair_scheme(x, p, k, group, rng, false, Channel(), hooks);
    out.errors.successes += run.value() != p.eval(x);
    ++out.errors.trials;
  }
  return out;
}

AliceAttack cheating_alice(int scheme, const std::string& strategy, int n, int k, std::size_t trials, Rng& rng) {
  const int group = group_for(scheme, n);
  auto log = std::make_shared<AliceStrategyLog>();
  const PairHooks hooks = make_alice_strategy(strategy, log, std::make_shared<Rng>(rng.split()));
  AliceAttack out;
  for (std::size_t t = 0; t < trials; ++t) {
    log->guesses.clear();
    const std::vector<Bit> x = random_bits(n, rng);
    const LinearPolynomial p = random_polynomial(n, rng);
    const LinpolyRun run = run_pair_scheme(x, p, k, group, rng, true, Channel(), hooks);
    for (const AliceStrategyLog::Guess& g : log->guesses) {
      out.identified.successes += g.a_guess == p.a[g.i];
      ++out.identified.trials;
    }
    out.errors.successes += run.value() != p.eval(x);
    ++out.errors.trials;
  }
  return out;
}

TrapAttack trap_detection(const CliffordTCircuit& circuit, int k, int traps, const std::string& behavior,
                          std::size_t trials, Rng& rng) {
  TrapAttack out;
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector in = random_state(circuit.n, rng).vector();
    const Scheme6Run r = run_scheme6(circuit, in, k, traps, rng, behavior);
    out.aborts.successes += r.aborted;
    ++out.aborts.trials;
  }
  return out;
}

}  // namespace qhelab
