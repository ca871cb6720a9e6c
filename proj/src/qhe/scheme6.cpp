// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/qhe/scheme6.hpp"

#include <stdexcept>

#include "qhelab/linpoly/strategies.hpp"

namespace qhelab {

namespace {

constexpr int kMaxTraps = 8;

}  // namespace

std::vector<CliffordTGate> trap_sequence(int trap, int data) {
  // The CNOT pair cancels around a diagonal gate on the control; the
  // remaining phases on the trap total P^4 = I between the two H gates.
  return {{"cnot", {trap, data}}, {"t", {trap}}, {"cnot", {trap, data}}, {"h", {trap}}, {"t", {trap}},
          {"t", {trap}},          {"p", {trap}}, {"p", {trap}},          {"p", {trap}}, {"h", {trap}}};
}

Scheme6Run run_scheme6(const CliffordTCircuit& c, const Vector& input, int k, int traps, Rng& rng,
                       const std::string& alice_behavior) {
  c.validate();
  if (c.n > 3 || c.t_count() > 3) throw std::invalid_argument("at most 3 qubits and 3 T gates");
  if (traps < 0 || traps > kMaxTraps) throw std::invalid_argument("trap count must lie in [0, 8]");
  if (input.size() != (Eigen::Index{1} << c.n)) throw std::invalid_argument("input dimension does not match circuit");

  Scheme6Run out;
  for (int t = 0; t < traps; ++t) {
    TrapPlan plan;
    plan.qubit = c.n + t;
    plan.eigen = rng.bit();
    plan.data = rng.uniform_int(0, c.n - 1);
    plan.insert = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(c.gates.size())));
    out.traps.push_back(plan);
  }

  CliffordTCircuit aug;
  aug.n = c.n + traps;
  for (std::size_t pos = 0; pos <= c.gates.size(); ++pos) {
    for (const TrapPlan& plan : out.traps)
      if (plan.insert == pos)
        for (CliffordTGate& g : trap_sequence(plan.qubit, plan.data)) aug.gates.push_back(std::move(g));
    if (pos < c.gates.size()) aug.gates.push_back(c.gates[pos]);
  }

  Eigen::Index trap_index = 0;
  std::vector<TrapCheck> checks;
  for (const TrapPlan& plan : out.traps) {
    trap_index |= Eigen::Index{plan.eigen} << (plan.qubit - c.n);
    checks.push_back({plan.qubit, plan.eigen});
  }
  Vector aug_input = Vector::Zero(Eigen::Index{1} << aug.n);
  aug_input.segment(trap_index << c.n, input.size()) = input;

  Scheme5Options opt;
  if (alice_behavior != "honest") {
    opt.alice_hooks = make_alice_strategy(alice_behavior, nullptr);
    opt.track_soundness = false;
  }
  QheCoreResult core = run_qhe_core(aug, c.n, aug_input, k, rng, opt, checks, "scheme6");
  out.aborted = core.aborted;
  out.failing_trap = core.failing_trap;
  out.run = std::move(core.run);
  out.run.report.params["behavior"] = alice_behavior;
  return out;
}

}  // namespace qhelab
