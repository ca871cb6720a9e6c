// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhelab/harness/report.hpp"
#include "qhelab/harness/transcript.hpp"
#include "qhelab/qsim/rng.hpp"
#include "qhelab/qsim/state.hpp"
#include "qhelab/rebit_schemes/circuit.hpp"

namespace qhelab {

// Pauli frame X^x Z^z per qubit; data qubits first, phase qubit last.
// X^1 Z^1 is R_y(pi) up to sign.
struct PauliCorrectionList {
  std::vector<Bit> x, z;

  explicit PauliCorrectionList(int qubits = 0) : x(qubits, 0), z(qubits, 0) {}
  int size() const { return static_cast<int>(x.size()); }
  void flip_y(int q) { x.at(q) ^= 1; z.at(q) ^= 1; }
  bool anticommutes_with_y(int q) const { return (x.at(q) ^ z.at(q)) != 0; }
  // "I", "Ry(pi)", "Z" or "X".
  std::string label(int q) const;
  bool is_identity() const;
  // Pushes the frame on `targets` through a fixed gate: P -> G P G^dag.
  void conjugate(const Matrix& gate, const std::vector<int>& targets);
};

struct RebitRunOptions {
  // Simplified mask variant: data qubits 1..n-1 are R_y(pi)-masked and held by Bob.
  bool masked = false;
  // Forces the mask bits (one per data qubit 1..n-1) instead of drawing them.
  std::optional<std::vector<Bit>> masks;
};

struct RebitRun {
  Vector output;  // physical register, data qubits then phase qubit
  Transcript transcript;
  SchemeReport report;
  PauliCorrectionList residual;  // frame left after Alice's corrections
  std::vector<Bit> masks;
};

RebitRun run_scheme1(const AlmostCommutingCircuit& c, const Vector& input, Rng& rng, const RebitRunOptions& opt = {});
RebitRun run_scheme2(const AlmostCommutingCircuit& c, const Vector& input, Rng& rng);
RebitRun simplified_mask_variant(const AlmostCommutingCircuit& c, const Vector& input, Rng& rng,
                                 std::optional<std::vector<Bit>> masks = std::nullopt);

// Alice's half of the protocol, up to the outcome message. Gadget half-pairs
// sit above the data and phase qubits in gadget order, followed by nothing else;
// held qubits stay at their data index with owner Bob.
struct GadgetRecord {
  std::size_t layer = 0;
  int local = 0;   // position inside the layer
  int data = 0;    // data qubit index
  int b_index = 0; // Bob's half in the register
  Bit m = 0;
};

struct AlicePhase {
  QuantumState state;
  std::vector<GadgetRecord> gadgets;
  std::vector<Bit> masks;
  std::vector<int> held;  // data qubits Bob holds directly
};

AlicePhase rebit_alice_phase(const AlmostCommutingCircuit& c, const Vector& input, Rng& rng, bool masked,
                             const std::optional<std::vector<Bit>>& masks);

}  // namespace qhelab
