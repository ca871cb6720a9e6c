// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhelab/harness/transcript.hpp"
#include "qhelab/qsim/rng.hpp"
#include "qhelab/qsim/state.hpp"

namespace qhelab {

struct SharedResources {
  QuantumState state;
};

class PartyContext {
 public:
  PartyContext(Party self, Channel channel, Rng rng, SharedResources& shared)
      : self_(self), channel_(std::move(channel)), rng_(std::move(rng)), shared_(shared) {}

  Party self() const { return self_; }
  Rng& rng() { return rng_; }
  SharedResources& shared() { return shared_; }

  void send(const std::string& tag, BitString bits) { channel_.send(self_, tag, std::move(bits)); }
  BitString receive(const std::string& tag) { return channel_.receive(self_, tag); }
  [[noreturn]] void abort(const std::string& reason);

  std::map<std::string, BitString> outputs;

 private:
  Party self_;
  Channel channel_;
  Rng rng_;
  SharedResources& shared_;
};

using Step = std::function<void(PartyContext&)>;
using Program = std::vector<Step>;

struct ProtocolResult {
  std::map<std::string, BitString> alice;
  std::map<std::string, BitString> bob;
  Transcript transcript;
  bool aborted = false;
  std::optional<Party> abort_party;
  std::string abort_reason;
};

// Runs alice[0], bob[0], alice[1], bob[1], ... Each party draws from its own
// split of rng. An abort is recorded as an "abort" message and halts the run.
ProtocolResult run_protocol(const Program& alice, const Program& bob, SharedResources& shared, Rng& rng);
ProtocolResult run_protocol(const Program& alice, const Program& bob, Rng& rng);

}  // namespace qhelab
