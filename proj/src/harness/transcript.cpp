// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/harness/transcript.hpp"

#include <sstream>

namespace qhelab {

void Transcript::append(Message m) {
  if (!messages_.empty() && m.round < messages_.back().round)
    throw std::invalid_argument("transcript rounds must be nondecreasing");
  if (m.tag.empty() || m.tag.find_first_of(" \t\n") != std::string::npos)
    throw std::invalid_argument("message tag must be a nonempty token");
  messages_.push_back(std::move(m));
}

std::size_t Transcript::bits_sent(Party sender) const {
  std::size_t total = 0;
  for (const Message& m : messages_)
    if (m.sender == sender) total += m.bits.size();
  return total;
}

std::size_t Transcript::message_count(Party sender) const {
  std::size_t total = 0;
  for (const Message& m : messages_)
    if (m.sender == sender) ++total;
  return total;
}

std::string Transcript::serialize() const {
  std::ostringstream out;
  for (const Message& m : messages_)
    out << m.round << ' ' << party_name(m.sender) << ' ' << m.tag << ' ' << m.bits.to_hex() << '\n';
  return out.str();
}

Transcript Transcript::parse(std::string_view text) {
  Transcript t;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Message m;
    std::string sender, hex, extra;
    if (!(ls >> m.round >> sender >> m.tag >> hex) || (ls >> extra))
      throw std::invalid_argument("malformed transcript line: " + line);
    if (sender == "alice") m.sender = Party::Alice;
    else if (sender == "bob") m.sender = Party::Bob;
    else throw std::invalid_argument("unknown sender: " + sender);
    m.bits = BitString::from_hex(hex);
    t.append(std::move(m));
  }
  return t;
}

std::size_t comm_audit(const Transcript& t, Direction d) { return t.bits_sent(sender_of(d)); }

Channel::Channel() : Channel(std::make_shared<Transcript>()) {}

Channel::Channel(std::shared_ptr<Transcript> transcript) : state_(std::make_shared<State>()) {
  state_->transcript = std::move(transcript);
  state_->consumed.assign(state_->transcript->size(), true);
}

Channel Channel::scoped(const std::string& prefix) const {
  Channel c = *this;
  c.prefix_ = prefix_ + prefix + ".";
  return c;
}

void Channel::send(Party from, const std::string& tag, BitString bits) {
  Transcript& t = *state_->transcript;
  int round = t.last_round();
  if (t.empty()) round = 1;
  else if (t.messages().back().sender != from) ++round;
  t.append(Message{round, from, prefix_ + tag, std::move(bits)});
  state_->consumed.push_back(false);
}

BitString Channel::receive(Party to, const std::string& tag) {
  const std::string full = prefix_ + tag;
  const auto& msgs = state_->transcript->messages();
  for (std::size_t i = 0; i < msgs.size(); ++i) {
    if (state_->consumed[i] || msgs[i].sender == to || msgs[i].tag != full) continue;
    state_->consumed[i] = true;
    return msgs[i].bits;
  }
  throw ProtocolOrderError(std::string(party_name(to)) + " reads '" + full + "' before it was sent");
}

}  // namespace qhelab
