// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/linpoly/locking.hpp"

#include <cmath>
#include <stdexcept>

#include "qhelab/harness/teleport.hpp"
#include "qhelab/qsim/gates.hpp"
#include "qhelab/qsim/ops.hpp"

namespace qhelab {

LockingPreparation prepare_locking(const std::vector<Bit>& x, int k, Rng& rng) {
  const int n = static_cast<int>(x.size());
  LockingPreparation prep;
  for (int i = 0; i < n; ++i) prep.x_split.push_back(split_bit(x[i], k, rng));
  prep.s.resize(k);
  prep.t.resize(k);
  for (int j = 0; j < k; ++j) {
    prep.s[j] = rng.bit();
    prep.t[j] = rng.bit();
  }
  for (int j = 0; j < k; ++j) {
    Vector v = encode_single(prep.t[j], prep.s[j]);
    for (int i = n - 1; i >= 0; --i) {
      const Vector q = encode_single(prep.x_split[i][j], prep.s[j]);
      Vector w(v.size() * 2);
      for (Eigen::Index hi = 0; hi < v.size(); ++hi)
        for (int lo = 0; lo < 2; ++lo) w(2 * hi + lo) = v(hi) * q(lo);
      v = std::move(w);
    }
    prep.blocks.push_back(QuantumState::from_vector(v));
  }
  return prep;
}

LockingMeasurement locking_measure(QuantumState& block, const std::vector<Bit>& a, Rng& rng) {
  const int n = static_cast<int>(a.size());
  std::vector<int> ones;
  for (int i = 0; i < n; ++i)
    if (a[i]) ones.push_back(i);
  LockingMeasurement out;
  if (ones.empty()) return out;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t p = 0; p + 1 < ones.size(); p += 2) pairs.push_back({ones[p], ones[p + 1]});
  if (ones.size() % 2) pairs.push_back({ones.back(), n});
  for (const auto& [ctrl, tgt] : pairs) apply_gate_inplace(block, gates::CNOT(), {ctrl, tgt});
  for (const auto& [ctrl, tgt] : pairs) {
    Measurement mc = measure(block, Basis::X, ctrl, rng);
    Measurement mt = measure(mc.state, Basis::Z, tgt, rng);
    block = std::move(mt.state);
    out.u ^= mc.outcome;
    out.v ^= mt.outcome;
  }
  return out;
}

LockingHalf locking_first_half(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng,
                               Channel& channel, Party data) {
  check_inputs(x, p, k);
  const Party coef = other(data);
  LockingHalf half;
  half.prep = prepare_locking(x, k, rng);

  // Data holder teleports all k(n+1) qubits; the receiver undoes the corrections.
  BitString disclosed;
  std::vector<QuantumState> received;
  for (QuantumState block : half.prep.blocks) {
    for (int q = 0; q < block.num_qubits(); ++q) block.set_owner(q, data);
    std::vector<TeleportRecord> recs;
    for (int q = 0; q < block.num_qubits(); ++q) {
      recs.push_back(teleport_symbolic(block, q, TeleportMask{}, rng));
      disclosed.append(recs.back().disclosed);
    }
    for (const TeleportRecord& r : recs) apply_disclosed_corrections(block, r);
    received.push_back(std::move(block));
  }
  channel.send(data, "disclosed", disclosed);
  channel.receive(coef, "disclosed");

  half.w = p.weight();
  for (QuantumState& block : received) {
    LockingMeasurement m = locking_measure(block, p.a, rng);
    half.u.push_back(m.u);
    half.r.push_back(m.u ^ m.v);
  }
  return half;
}

Bit locking_local_value(const LockingPreparation& prep, const std::vector<Bit>& r, Bit w) {
  Bit y = 0;
  for (std::size_t j = 0; j < r.size(); ++j) y ^= ((prep.s[j] ^ 1) & r[j]) ^ (prep.t[j] & w);
  return y;
}

namespace {

DistributedBit by_party(Party data, Bit data_share, Bit coef_share) {
  return data == Party::Alice ? DistributedBit{data_share, coef_share} : DistributedBit{coef_share, data_share};
}

}  // namespace

LinpolyRun run_locking(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng, bool distributed,
                       Channel channel, Party data) {
  const Party coef = other(data);
  LockingHalf half = locking_first_half(x, p, k, rng, channel, data);
  BitString rw(half.r);
  rw.push_back(half.w);
  channel.send(coef, "r_w", rw);
  Bit mask = p.c;
  for (Bit u : half.u) mask ^= u;
  if (!distributed) channel.send(coef, "mask", BitString{mask});

  const BitString got = channel.receive(data, "r_w");
  std::vector<Bit> r(got.bits().begin(), got.bits().begin() + k);
  const Bit y0 = locking_local_value(half.prep, r, got[k]);

  LinpolyRun run;
  run.distributed = distributed;
  run.shares = distributed ? by_party(data, y0, mask)
                           : by_party(data, y0 ^ channel.receive(data, "mask")[0], 0);
  run.transcript = channel.transcript();
  return run;
}

LinpolyRun run_scheme8(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng, bool distributed) {
  return run_locking(x, p, k, rng, distributed, Channel(), Party::Alice);
}

int scheme9_outer_k(int n, double gamma) {
  if (!(gamma > 1.0 && gamma < 2.0)) throw std::invalid_argument("gamma must lie strictly between 1 and 2");
  if (n < 1) throw std::invalid_argument("n must be positive");
  return static_cast<int>(std::ceil(gamma * n - 1e-9));
}

LinpolyRun run_scheme9(const std::vector<Bit>& x, const LinearPolynomial& p, double gamma, int k_prime, Rng& rng,
                       bool distributed) {
  const int k = scheme9_outer_k(p.n, gamma);
  if (k_prime < 1) throw std::invalid_argument("inner k must be positive");
  Channel channel;
  Channel outer = channel.scoped("outer");
  LockingHalf half = locking_first_half(x, p, k, rng, outer, Party::Alice);

  // Inner instance: Bob holds (R_1..R_k, w); Alice holds the coefficients
  // (1 ^ s_j) and sum_j t_j of her local evaluation.
  std::vector<Bit> inner_x(half.r);
  inner_x.push_back(half.w);
  LinearPolynomial inner{k + 1, {}, 0};
  Bit tsum = 0;
  for (int j = 0; j < k; ++j) {
    inner.a.push_back(half.prep.s[j] ^ 1);
    tsum ^= half.prep.t[j];
  }
  inner.a.push_back(tsum);
  LinpolyRun in = run_locking(inner_x, inner, k_prime, rng, true, channel.scoped("inner"), Party::Bob);

  Bit bob = p.c ^ in.shares.bob_bit;
  for (Bit u : half.u) bob ^= u;
  LinpolyRun run;
  run.distributed = distributed;
  if (distributed) {
    run.shares = {in.shares.alice_bit, bob};
  } else {
    outer.send(Party::Bob, "share", BitString{bob});
    run.shares = {static_cast<Bit>(in.shares.alice_bit ^ outer.receive(Party::Alice, "share")[0]), 0};
  }
  run.transcript = channel.transcript();
  return run;
}

Bit inner_product_demo(const std::vector<Bit>& x, const std::vector<Bit>& a, Rng& rng) {
  if (x.size() != a.size()) throw std::invalid_argument("x and a must have equal length");
  LinearPolynomial p{static_cast<int>(a.size()), a, 0};
  return run_scheme8(x, p, 1, rng).value();
}

}  // namespace qhelab
