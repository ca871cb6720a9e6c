// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <json.hpp>

#include "qhelab/harness/transcript.hpp"
#include "qhelab/qsim/rng.hpp"
#include "qhelab/qsim/types.hpp"

namespace qhelab {

// y = c + sum_i a_i x_i mod 2.
struct LinearPolynomial {
  int n = 0;
  std::vector<Bit> a;
  Bit c = 0;

  static LinearPolynomial zero(int n) { return {n, std::vector<Bit>(n, 0), 0}; }
  void validate() const;
  Bit eval(const std::vector<Bit>& x) const;
  Bit weight() const;  // sum_i a_i mod 2
};

LinearPolynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::json polynomial_to_json(const LinearPolynomial& p);

struct DistributedBit {
  Bit alice_bit = 0;
  Bit bob_bit = 0;
  Bit value() const { return alice_bit ^ bob_bit; }
};

// Outcome of one evaluation. In full mode Bob's last bit has been sent and
// folded in, so shares.bob_bit is 0 and shares.alice_bit is the output.
struct LinpolyRun {
  DistributedBit shares;
  bool distributed = false;
  Transcript transcript;
  Bit value() const { return shares.value(); }
};

// Two-qubit encoding, first qubit at local index 0:
// (0,0)->|00>, (0,1)->|++>, (1,0)->|10>, (1,1)->|+->.
Vector encode_pair(Bit x, Bit s);
// Single-qubit encoding: x in the Z basis (s=0) or the X basis (s=1).
Vector encode_single(Bit x, Bit s);

// x_i1..x_ik uniform subject to XOR = x_i; draws k-1 bits.
std::vector<Bit> split_bit(Bit x, int k, Rng& rng);

void check_inputs(const std::vector<Bit>& x, const LinearPolynomial& p, int k);

}  // namespace qhelab
