// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include <type_traits>

#include <gtest/gtest.h>

#include "qhelab/harness.hpp"
#include "qhelab/qsim.hpp"

namespace qhelab {
namespace {

static_assert(!std::is_convertible_v<Secret<Bit>, BitString>);
static_assert(!std::is_constructible_v<BitString, Secret<Bit>>);
static_assert(!std::is_constructible_v<BitString, Secret<std::array<Bit, 2>>>);

TEST(BitString, HexRoundTrip) {
  for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 13u}) {
    std::vector<Bit> bits;
    for (std::size_t i = 0; i < len; ++i) bits.push_back((i * 7 + 3) % 3 == 0);
    BitString b(bits);
    EXPECT_EQ(BitString::from_hex(b.to_hex()), b);
  }
  EXPECT_EQ(BitString({1, 0, 1, 1, 1}).to_hex(), "5:1d");
  EXPECT_THROW(BitString::from_hex("2:7"), std::invalid_argument);
  EXPECT_THROW(BitString::from_hex("zz"), std::invalid_argument);
}

TEST(Secret, OnlyOwnerMayReveal) {
  Secret<Bit> s(Party::Alice, 1);
  EXPECT_EQ(s.reveal(Party::Alice), 1);
  EXPECT_THROW(s.reveal(Party::Bob), std::logic_error);
}

TEST(Transcript, RoundsAndSerialization) {
  Transcript t;
  t.append({1, Party::Alice, "x", BitString{1, 0}});
  t.append({2, Party::Bob, "y", BitString{1, 1, 1}});
  EXPECT_THROW(t.append({1, Party::Alice, "z", BitString{}}), std::invalid_argument);
  EXPECT_EQ(t.serialize(), "1 alice x 2:1\n2 bob y 3:7\n");
  EXPECT_EQ(Transcript::parse(t.serialize()), t);
  EXPECT_EQ(comm_audit(t, Direction::AliceToBob), 2u);
  EXPECT_EQ(comm_audit(t, Direction::BobToAlice), 3u);
}

TEST(Transcript, EmptyAuditIsZero) {
  Transcript t;
  EXPECT_EQ(comm_audit(t, Direction::AliceToBob), 0u);
  EXPECT_EQ(comm_audit(t, Direction::BobToAlice), 0u);
}

TEST(Channel, ScopedTagsAndOrderErrors) {
  Channel c;
  Channel sub = c.scoped("inner");
  sub.send(Party::Alice, "m", BitString{1});
  EXPECT_EQ(c.transcript().messages().back().tag, "inner.m");
  EXPECT_THROW(c.receive(Party::Bob, "m"), ProtocolOrderError);
  EXPECT_EQ(sub.receive(Party::Bob, "m"), BitString{1});
  EXPECT_THROW(sub.receive(Party::Bob, "m"), ProtocolOrderError);
  EXPECT_THROW(sub.receive(Party::Alice, "never"), ProtocolOrderError);
}

TEST(RunProtocol, EmptyProgramsGiveEmptyTranscript) {
  Rng rng(1);
  ProtocolResult r = run_protocol({}, {}, rng);
  EXPECT_TRUE(r.transcript.empty());
  EXPECT_FALSE(r.aborted);
}

TEST(RunProtocol, EchoRound) {
  Rng rng(1);
  Program alice = {[](PartyContext& c) { c.send("ping", BitString{1, 0, 1}); },
                   [](PartyContext& c) { c.outputs["echo"] = c.receive("pong"); }};
  Program bob = {[](PartyContext& c) { c.send("pong", c.receive("ping")); }};
  ProtocolResult r = run_protocol(alice, bob, rng);
  ASSERT_EQ(r.transcript.size(), 2u);
  EXPECT_EQ(r.transcript.messages()[0].bits, r.transcript.messages()[1].bits);
  EXPECT_EQ(r.alice.at("echo"), (BitString{1, 0, 1}));
  EXPECT_EQ(r.transcript.messages()[0].round, 1);
  EXPECT_EQ(r.transcript.messages()[1].round, 2);
}

TEST(RunProtocol, ReadingUnsentMessageFailsLoudly) {
  Rng rng(1);
  Program alice = {[](PartyContext& c) { c.receive("nothing"); }};
  EXPECT_THROW(run_protocol(alice, {}, rng), ProtocolOrderError);
}

TEST(RunProtocol, AbortHaltsAndIsRecorded) {
  Rng rng(1);
  bool reached = false;
  Program alice = {[](PartyContext& c) { c.send("a", BitString{1}); }, [&](PartyContext&) { reached = true; }};
  Program bob = {[](PartyContext& c) { c.abort("trap 2"); }};
  ProtocolResult r = run_protocol(alice, bob, rng);
  EXPECT_TRUE(r.aborted);
  EXPECT_EQ(*r.abort_party, Party::Bob);
  EXPECT_EQ(r.abort_reason, "trap 2");
  EXPECT_EQ(r.transcript.messages().back().tag, "abort");
  EXPECT_FALSE(reached);
}

TEST(Teleport, MaskValidation) {
  QuantumState s = QuantumState::basis(1, 0);
  Rng rng(1);
  EXPECT_THROW(teleport_symbolic(s, 0, TeleportMask{kMaskZ, kMaskBoth}, rng), std::invalid_argument);
  EXPECT_THROW(teleport_symbolic(s, 0, TeleportMask{0, kMaskX}, rng), std::invalid_argument);
}

TEST(Teleport, NothingWithheldIsIdentity) {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    QuantumState psi = random_state(1, rng);
    QuantumState s = psi;
    TeleportRecord rec = teleport_symbolic(s, 0, TeleportMask{}, rng);
    EXPECT_EQ(s.owner(0), Party::Bob);
    EXPECT_EQ(rec.disclosed.size(), 2u);
    apply_disclosed_corrections(s, rec);
    EXPECT_NEAR(fidelity(psi.vector(), s.vector()), 1.0, 1e-12);
  }
}

TEST(Teleport, BothWithheldIsOneTimePad) {
  Rng rng(3);
  QuantumState psi = random_state(1, rng);
  Matrix avg = Matrix::Zero(2, 2);
  enumerate_tapes([&](Rng& r) {
    QuantumState s = psi;
    TeleportRecord rec = teleport_symbolic(s, 0, TeleportMask::withholding(kMaskBoth), r);
    EXPECT_TRUE(rec.disclosed.empty());
    avg += r.weight() * s.to_density();
  });
  EXPECT_NEAR((avg - 0.5 * Matrix::Identity(2, 2)).norm(), 0.0, 1e-12);
}

// Choi matrix of the channel "teleport then receiver applies disclosed
// corrections", averaged over all randomness.
Matrix choi(bool literal, TeleportMask mask) {
  Matrix out = Matrix::Zero(4, 4);
  enumerate_tapes([&](Rng& r) {
    // Qubit 0 is teleported; qubit 1 is the reference half.
    QuantumState s = QuantumState::from_vector(epr_pair());
    TeleportRecord rec = literal ? teleport_literal(s, 0, mask, r) : teleport_symbolic(s, 0, mask, r);
    apply_disclosed_corrections(s, rec);
    out += r.weight() * s.to_density();
  });
  return out;
}

TEST(Teleport, SymbolicAndLiteralChannelsAgree) {
  for (unsigned withheld : {0u, unsigned{kMaskX}, unsigned{kMaskZ}, unsigned{kMaskBoth}}) {
    TeleportMask m = TeleportMask::withholding(withheld);
    Matrix a = choi(false, m), b = choi(true, m);
    EXPECT_NEAR((a - b).norm(), 0.0, 1e-12) << withheld;
  }
}

TEST(Teleport, SymbolicAndLiteralAgreeOnRandomInputs) {
  Rng rng(5);
  for (unsigned withheld : {0u, unsigned{kMaskX}, unsigned{kMaskZ}, unsigned{kMaskBoth}})
    for (int i = 0; i < 50; ++i) {
      QuantumState psi = random_state(1, rng);
      Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
      for (bool literal : {false, true}) {
        enumerate_tapes([&](Rng& r) {
          QuantumState s = psi;
          TeleportRecord rec = literal ? teleport_literal(s, 0, TeleportMask::withholding(withheld), r)
                                       : teleport_symbolic(s, 0, TeleportMask::withholding(withheld), r);
          apply_disclosed_corrections(s, rec);
          (literal ? b : a) += r.weight() * s.to_density();
        });
      }
      ASSERT_NEAR((a - b).norm(), 0.0, 1e-9);
    }
}

TEST(Teleport, WithheldPatternOnEncodedPairMatchesLiteral) {
  // Pair |00>: withhold Z on the first qubit and X on the second.
  auto view = [](bool literal) {
    Matrix avg = Matrix::Zero(4, 4);
    enumerate_tapes([&](Rng& r) {
      QuantumState s = QuantumState::basis(2, 0);
      TeleportRecord r0 = literal ? teleport_literal(s, 0, TeleportMask::withholding(kMaskZ), r)
                                  : teleport_symbolic(s, 0, TeleportMask::withholding(kMaskZ), r);
      TeleportRecord r1 = literal ? teleport_literal(s, 1, TeleportMask::withholding(kMaskX), r)
                                  : teleport_symbolic(s, 1, TeleportMask::withholding(kMaskX), r);
      apply_disclosed_corrections(s, r0);
      apply_disclosed_corrections(s, r1);
      avg += r.weight() * s.to_density();
    });
    return avg;
  };
  Matrix sym = view(false);
  Matrix expect = Matrix::Zero(4, 4);
  expect(0, 0) = expect(2, 2) = 0.5;  // first qubit stays 0, second is X-twirled
  EXPECT_NEAR((sym - expect).norm(), 0.0, 1e-12);
  EXPECT_NEAR((view(true) - sym).norm(), 0.0, 1e-12);
}

TEST(Teleport, HiddenBitsStayOutOfTranscript) {
  Rng rng(8);
  Channel ch;
  QuantumState s = QuantumState::basis(1, 0);
  TeleportRecord rec = teleport_symbolic(s, 0, TeleportMask::withholding(kMaskZ), rng);
  ch.send(Party::Alice, "disclose", rec.disclosed);
  EXPECT_EQ(comm_audit(ch.transcript(), Direction::AliceToBob), 1u);
  EXPECT_THROW(rec.actual.reveal(Party::Bob), std::logic_error);
  EXPECT_THROW(rec.disclosed_z(), std::logic_error);
}

TEST(Report, WilsonAndChecks) {
  auto [lo, hi] = wilson_interval(50, 100);
  EXPECT_LT(lo, 0.5);
  EXPECT_GT(hi, 0.5);
  SchemeReport r;
  r.scheme = "test";
  r.seed = 3;
  r.add("x", 1.0, 1.0 + 1e-12, 1e-9, Check::Equal, "oracle");
  r.add("y", 0.5, 0.4, 0.0, Check::AtLeast, "bound");
  EXPECT_FALSE(r.all_pass());
  EXPECT_EQ(r.to_jsonl(), r.to_jsonl());
  EXPECT_NE(r.to_jsonl().find("\"seed\":3"), std::string::npos);
}

}  // namespace
}  // namespace qhelab
