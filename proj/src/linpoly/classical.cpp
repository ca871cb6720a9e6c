// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/linpoly/classical.hpp"

#include "qhelab/harness/protocol.hpp"

namespace qhelab {

LinpolyRun run_scheme10(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng, bool distributed) {
  check_inputs(x, p, k);
  const int n = p.n;
  std::vector<Bit> s(k);

  Program alice = {
      [&](PartyContext& ctx) {
        std::vector<std::vector<Bit>> split(n);
        for (int i = 0; i < n; ++i) split[i] = split_bit(x[i], k, ctx.rng());
        for (int j = 0; j < k; ++j) s[j] = ctx.rng().bit();
        // Pairs j-major; x_ij sits in slot s_j, the other slot is filler.
        BitString pairs;
        for (int j = 0; j < k; ++j)
          for (int i = 0; i < n; ++i) {
            const Bit filler = ctx.rng().bit();
            pairs.push_back(s[j] ? filler : split[i][j]);
            pairs.push_back(s[j] ? split[i][j] : filler);
          }
        ctx.send("pairs", pairs);
      },
      [&](PartyContext& ctx) {
        const BitString r = ctx.receive("r");
        Bit y0 = 0;
        for (int j = 0; j < k; ++j) y0 ^= s[j] & r[j];
        if (!distributed) y0 ^= ctx.receive("mask")[0];
        ctx.outputs["share"] = BitString{y0};
      }};

  Program bob = {[&](PartyContext& ctx) {
    const BitString pairs = ctx.receive("pairs");
    BitString r;
    Bit mask = p.c;
    for (int j = 0; j < k; ++j) {
      Bit u = 0, v = 0;
      for (int i = 0; i < n; ++i) {
        if (!p.a[i]) continue;
        const std::size_t at = 2 * (static_cast<std::size_t>(j) * n + i);
        u ^= pairs[at];
        v ^= pairs[at + 1];
      }
      r.push_back(u ^ v);
      mask ^= u;
    }
    ctx.send("r", r);
    if (!distributed) ctx.send("mask", BitString{mask});
    ctx.outputs["share"] = BitString{distributed ? mask : Bit{0}};
  }};

  ProtocolResult res = run_protocol(alice, bob, rng);
  LinpolyRun run;
  run.distributed = distributed;
  run.shares = {res.alice.at("share")[0], res.bob.at("share")[0]};
  run.transcript = res.transcript;
  return run;
}

}  // namespace qhelab
