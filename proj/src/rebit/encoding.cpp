// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/rebit/encoding.hpp"

#include <cmath>

namespace qhelab {

Vector rebit_encode(const Vector& psi) {
  const Eigen::Index d = psi.size();
  Vector out(2 * d);
  for (Eigen::Index x = 0; x < d; ++x) {
    out(x) = psi(x).real();
    out(d + x) = psi(x).imag();
  }
  return out;
}

Vector rebit_decode(const Vector& physical, double tol) {
  if (physical.size() < 2 || physical.size() % 2) throw std::invalid_argument("rebit state needs a phase qubit");
  if (physical.imag().cwiseAbs().maxCoeff() > tol) throw std::domain_error("rebit amplitudes must be real");
  const Eigen::Index d = physical.size() / 2;
  Vector out(d);
  for (Eigen::Index x = 0; x < d; ++x) out(x) = Complex(physical(x).real(), physical(d + x).real());
  return out;
}

Vector strip_global_phase(const Vector& v) {
  Eigen::Index best = 0;
  v.cwiseAbs().maxCoeff(&best);
  if (std::abs(v(best)) == 0.0) return v;
  return v * (std::conj(v(best)) / std::abs(v(best)));
}

std::vector<PhysicalGate> translate_logical_gate(const LogicalGate& g, int phase_qubit) {
  if (g.name == "id") return {};
  if (g.name == "rz") {
    if (g.qubits.size() != 1) throw std::invalid_argument("rz acts on one qubit");
    return {{gates::CRy(2 * g.theta), {g.qubits[0], phase_qubit}}};
  }
  if (g.name == "ry") {
    if (g.qubits.size() != 1) throw std::invalid_argument("ry acts on one qubit");
    return {{gates::Ry(g.theta), {g.qubits[0]}}};
  }
  if (g.name == "f") {
    if (g.qubits.size() != 2) throw std::invalid_argument("f acts on two qubits");
    return {{gates::F(), {g.qubits[0], g.qubits[1]}}};
  }
  throw UnsupportedGate("no real translation for logical gate '" + g.name + "'");
}

void apply_physical(QuantumState& s, const std::vector<PhysicalGate>& seq) {
  for (const PhysicalGate& pg : seq) apply_gate_inplace(s, pg.gate, pg.targets);
}

}  // namespace qhelab
