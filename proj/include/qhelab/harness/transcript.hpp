// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qhelab/harness/bits.hpp"

namespace qhelab {

struct Message {
  int round = 0;
  Party sender = Party::Alice;
  std::string tag;
  BitString bits;

  friend bool operator==(const Message&, const Message&) = default;
};

enum class Direction { AliceToBob, BobToAlice };

inline Party sender_of(Direction d) { return d == Direction::AliceToBob ? Party::Alice : Party::Bob; }

class Transcript {
 public:
  // Throws std::invalid_argument if the round decreases.
  void append(Message m);

  const std::vector<Message>& messages() const { return messages_; }
  std::size_t size() const { return messages_.size(); }
  bool empty() const { return messages_.empty(); }
  std::size_t bits_sent(Party sender) const;
  std::size_t message_count(Party sender) const;
  int last_round() const { return messages_.empty() ? 0 : messages_.back().round; }

  // One line per message: `round sender tag hexbits`.
  std::string serialize() const;
  static Transcript parse(std::string_view text);

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::vector<Message> messages_;
};

std::size_t comm_audit(const Transcript& t, Direction d);

// A program asked for a message the other party has not sent.
class ProtocolOrderError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Message passing over a shared transcript. The round advances whenever the
// sender changes. Scoped copies prefix their tags so composed sub-protocols
// can share one transcript.
class Channel {
 public:
  Channel();
  explicit Channel(std::shared_ptr<Transcript> transcript);

  Channel scoped(const std::string& prefix) const;

  void send(Party from, const std::string& tag, BitString bits);
  BitString receive(Party to, const std::string& tag);

  const Transcript& transcript() const { return *state_->transcript; }
  std::shared_ptr<Transcript> shared_transcript() const { return state_->transcript; }

 private:
  struct State {
    std::shared_ptr<Transcript> transcript;
    std::vector<bool> consumed;
  };
  std::shared_ptr<State> state_;
  std::string prefix_;
};

}  // namespace qhelab
