// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/harness/protocol.hpp"

#include <algorithm>

namespace qhelab {

namespace {

struct AbortSignal {
  Party party;
  std::string reason;
};

}  // namespace

void PartyContext::abort(const std::string& reason) {
  channel_.send(self_, "abort", BitString{});
  throw AbortSignal{self_, reason};
}

ProtocolResult run_protocol(const Program& alice, const Program& bob, SharedResources& shared, Rng& rng) {
  Channel channel;
  PartyContext a(Party::Alice, channel, rng.split(), shared);
  PartyContext b(Party::Bob, channel, rng.split(), shared);
  ProtocolResult result;
  try {
    const std::size_t steps = std::max(alice.size(), bob.size());
    for (std::size_t i = 0; i < steps; ++i) {
      if (i < alice.size()) alice[i](a);
      if (i < bob.size()) bob[i](b);
    }
  } catch (const AbortSignal& sig) {
    result.aborted = true;
    result.abort_party = sig.party;
    result.abort_reason = sig.reason;
  }
  result.alice = std::move(a.outputs);
  result.bob = std::move(b.outputs);
  result.transcript = channel.transcript();
  return result;
}

ProtocolResult run_protocol(const Program& alice, const Program& bob, Rng& rng) {
  SharedResources shared;
  return run_protocol(alice, bob, shared, rng);
}

}  // namespace qhelab
