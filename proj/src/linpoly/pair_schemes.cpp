// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/linpoly/pair_schemes.hpp"

#include <stdexcept>

#include "qhelab/harness/teleport.hpp"
#include "qhelab/qsim/gates.hpp"
#include "qhelab/qsim/ops.hpp"

namespace qhelab {

std::vector<PreparedPair> prepare_pairs(const std::vector<Bit>& x, int k, int group, Rng& rng,
                                        const PairHooks& hooks, BitString* disclosed) {
  const int n = static_cast<int>(x.size());
  if (group < 1 || group > n) throw std::invalid_argument("group size must lie in [1, n]");
  std::vector<std::vector<Bit>> split(n);
  for (int i = 0; i < n; ++i) split[i] = split_bit(x[i], k, rng);
  const int groups = (n + group - 1) / group;
  std::vector<std::vector<Bit>> basis(groups, std::vector<Bit>(k));
  for (int j = 0; j < k; ++j)
    for (int g = 0; g < groups; ++g) basis[g][j] = rng.bit();

  std::vector<PreparedPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < n; ++i) {
      PairSecrets sec;
      sec.i = i;
      sec.j = j;
      sec.x_split = split[i][j];
      sec.s = basis[i / group][j];
      std::optional<Vector> custom = hooks.alice_encode ? hooks.alice_encode(i, j) : std::nullopt;
      QuantumState st = QuantumState::from_vector(custom ? *custom : encode_pair(sec.x_split, sec.s));
      TeleportRecord r1 = teleport_symbolic(st, 0, TeleportMask::withholding(kMaskZ), rng);
      TeleportRecord r2 = teleport_symbolic(st, 1, TeleportMask::withholding(kMaskX), rng);
      sec.withheld_z1 = r1.actual.reveal(Party::Alice)[1];
      sec.withheld_x2 = r2.actual.reveal(Party::Alice)[0];
      sec.t = sec.s ? sec.withheld_z1 : sec.withheld_x2;
      if (disclosed) {
        disclosed->append(r1.disclosed);
        disclosed->append(r2.disclosed);
      }
      apply_disclosed_corrections(st, r1);
      apply_disclosed_corrections(st, r2);
      pairs.push_back({sec, std::move(st)});
    }
  }
  return pairs;
}

LinpolyRun run_pair_scheme(const std::vector<Bit>& x, const LinearPolynomial& p, int k, int group, Rng& rng,
                           bool distributed, Channel channel, const PairHooks& hooks) {
  check_inputs(x, p, k);
  const int n = p.n;
  const int groups = (n + group - 1) / group;

  // Alice: split, encode, teleport with withheld bits.
  BitString disclosed;
  std::vector<PreparedPair> pairs = prepare_pairs(x, k, group, rng, hooks, &disclosed);
  channel.send(Party::Alice, "disclosed", disclosed);

  // Bob: conditional CNOT, return teleport withholding everything.
  channel.receive(Party::Bob, "disclosed");
  std::vector<std::vector<Bit>> parity(groups, std::vector<Bit>(k, 0));
  Bit bob_mask = p.c;
  for (PreparedPair& pp : pairs) {
    const int i = pp.secrets.i, j = pp.secrets.j;
    if (hooks.bob_tamper) hooks.bob_tamper(i, j, pp.state, rng);
    if (!p.a[i]) apply_gate_inplace(pp.state, gates::CNOT(), {0, 1});
    for (int q = 0; q < 2; ++q) {
      TeleportRecord rec = teleport_symbolic(pp.state, q, TeleportMask::withholding(kMaskBoth), rng);
      const auto& ab = rec.actual.reveal(Party::Bob);
      bob_mask ^= ab[0];                       // sigma_y part of X^a Z^b
      parity[i / group][j] ^= ab[0] ^ ab[1];   // leftover sigma_z
    }
  }
  BitString parity_bits;
  for (int j = 0; j < k; ++j)
    for (int g = 0; g < groups; ++g) parity_bits.push_back(parity[g][j]);
  channel.send(Party::Bob, "parity", parity_bits);
  if (!distributed) channel.send(Party::Bob, "mask", BitString{bob_mask});

  // Alice: basis-dependent measurements and bit assembly.
  const BitString d = channel.receive(Party::Alice, "parity");
  std::vector<std::vector<Bit>> group_bit(groups, std::vector<Bit>(k, 0));
  std::vector<std::vector<Bit>> group_basis(groups, std::vector<Bit>(k, 0));
  for (PreparedPair& pp : pairs) {
    const PairSecrets& sec = pp.secrets;
    const int g = sec.i / group;
    const Bit dg = d[static_cast<std::size_t>(sec.j) * groups + g];
    group_basis[g][sec.j] = sec.s;
    std::optional<Bit> custom = hooks.alice_decode ? hooks.alice_decode(sec, pp.state, dg, rng) : std::nullopt;
    Bit bit;
    if (custom) {
      bit = *custom & 1;
    } else {
      const Basis b = sec.s ? Basis::X : Basis::Z;
      Measurement m1 = measure(pp.state, b, 0, rng);
      Measurement m2 = measure(m1.state, b, 1, rng);
      bit = m1.outcome ^ m2.outcome ^ sec.t;
    }
    group_bit[g][sec.j] ^= bit;
  }
  Bit alice = 0;
  for (int g = 0; g < groups; ++g)
    for (int j = 0; j < k; ++j)
      alice ^= group_bit[g][j] ^ (group_basis[g][j] & d[static_cast<std::size_t>(j) * groups + g]);

  LinpolyRun run;
  run.distributed = distributed;
  if (distributed) {
    run.shares = {alice, bob_mask};
  } else {
    run.shares = {static_cast<Bit>(alice ^ channel.receive(Party::Alice, "mask")[0]), 0};
  }
  run.transcript = channel.transcript();
  return run;
}

LinpolyRun run_scheme4(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng, bool distributed,
                       const PairHooks& hooks) {
  return run_pair_scheme(x, p, k, 1, rng, distributed, Channel(), hooks);
}

LinpolyRun run_scheme7(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng, bool distributed,
                       const PairHooks& hooks) {
  check_inputs(x, p, k);
  return run_pair_scheme(x, p, k, p.n, rng, distributed, Channel(), hooks);
}

}  // namespace qhelab
