// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/rebit_schemes/views.hpp"

#include <algorithm>
#include <optional>

#include "qhelab/qsim/ops.hpp"
#include "qhelab/rebit_schemes/schemes.hpp"

namespace qhelab {

namespace {

struct Leaf {
  double weight;
  AlicePhase phase;
};

std::vector<Leaf> enumerate_alice(const AlmostCommutingCircuit& c, const Vector& input, bool masked) {
  std::vector<Leaf> leaves;
  enumerate_tapes([&](Rng& rng) {
    AlicePhase p = rebit_alice_phase(c, input, rng, masked, std::nullopt);
    leaves.push_back({rng.weight(), std::move(p)});
  });
  return leaves;
}

}  // namespace

Matrix rebit_bob_view(const AlmostCommutingCircuit& c, const Vector& input, bool masked) {
  std::vector<Leaf> leaves = enumerate_alice(c, input, masked);
  const AlicePhase& first = leaves.front().phase;
  const int g = static_cast<int>(first.gadgets.size());
  std::vector<int> keep;
  for (const GadgetRecord& r : first.gadgets) keep.push_back(r.b_index);
  for (int q : first.held) keep.push_back(q);
  // No gadget and no held qubit: Bob receives nothing.
  if (keep.empty()) return Matrix::Ones(1, 1);
  const Eigen::Index block = Eigen::Index{1} << keep.size();
  const Eigen::Index dim = block << g;
  Matrix view = Matrix::Zero(dim, dim);
  for (const Leaf& leaf : leaves) {
    std::size_t m = 0;
    for (int i = 0; i < g; ++i) m |= std::size_t{leaf.phase.gadgets[i].m} << i;
    // partial_trace re-sorts kept qubits; b indices exceed data indices so
    // sorted order puts held qubits first. Reorder to gadget halves first.
    Matrix rho = reduced_density(leaf.phase.state, keep);
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> perm;  // perm[pos in keep] = pos in sorted
    for (int q : keep) perm.push_back(static_cast<int>(std::find(sorted.begin(), sorted.end(), q) - sorted.begin()));
    Matrix out(block, block);
    auto map = [&](Eigen::Index idx) {
      Eigen::Index src = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        if ((idx >> i) & 1) src |= Eigen::Index{1} << perm[i];
      return src;
    };
    for (Eigen::Index r = 0; r < block; ++r)
      for (Eigen::Index col = 0; col < block; ++col) out(r, col) = rho(map(r), map(col));
    view.block(static_cast<Eigen::Index>(m) * block, static_cast<Eigen::Index>(m) * block, block, block) +=
        leaf.weight * out;
  }
  return view;
}

Matrix rebit_held_view(const AlmostCommutingCircuit& c, const Vector& input) {
  // Before any gadget runs: only the mask draw matters.
  AlmostCommutingCircuit empty{c.n, {}};
  Matrix view;
  enumerate_tapes([&](Rng& rng) {
    AlicePhase p = rebit_alice_phase(empty, input, rng, true, std::nullopt);
    Matrix rho = rng.weight() * reduced_density(p.state, p.held);
    view = view.size() ? Matrix(view + rho) : rho;
  });
  return view;
}

}  // namespace qhelab
