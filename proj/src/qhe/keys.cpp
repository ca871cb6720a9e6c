// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/qhe/keys.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "qhelab/qsim/gates.hpp"
#include "qhelab/qsim/rng.hpp"

namespace qhelab {

F2Form F2Form::variable(int vars, int v) {
  F2Form f(vars);
  f.coef.at(v) = 1;
  return f;
}

Bit F2Form::eval(const std::vector<Bit>& values) const {
  if (values.size() != coef.size()) throw std::invalid_argument("variable count mismatch");
  Bit r = constant;
  for (std::size_t v = 0; v < coef.size(); ++v) r ^= coef[v] & values[v];
  return r;
}

F2Form& F2Form::operator^=(const F2Form& o) {
  if (o.coef.size() != coef.size()) throw std::invalid_argument("variable count mismatch");
  for (std::size_t v = 0; v < coef.size(); ++v) coef[v] ^= o.coef[v];
  constant ^= o.constant;
  return *this;
}

F2Form F2Form::scaled(Bit b) const { return b ? *this : F2Form(static_cast<int>(coef.size())); }

bool F2Form::depends_on_any(int first, int last) const {
  for (int v = first; v < last; ++v)
    if (coef.at(v)) return true;
  return false;
}

PauliKeyPolynomial PauliKeyPolynomial::initial(int n, int qubits, int uses) {
  if (n < 0 || qubits < n || uses < 0) throw std::invalid_argument("bad key layout");
  PauliKeyPolynomial k;
  k.n = n;
  k.qubits = qubits;
  k.uses = uses;
  const int vars = k.variable_count();
  k.fa.assign(qubits, F2Form(vars));
  k.fb.assign(qubits, F2Form(vars));
  for (int i = 0; i < n; ++i) {
    k.fa[i] = F2Form::variable(vars, i);
    k.fb[i] = F2Form::variable(vars, n + i);
  }
  return k;
}

namespace {

int arity(const std::string& g) {
  if (g == "cnot") return 2;
  if (g == "h" || g == "p" || g == "t" || g == "x" || g == "y" || g == "z") return 1;
  throw std::invalid_argument("unknown gate " + g);
}

std::string normalize(std::string g) {
  std::transform(g.begin(), g.end(), g.begin(), [](unsigned char c) { return std::tolower(c); });
  if (g == "cx") g = "cnot";
  if (g == "s") g = "p";
  return g;
}

void check_targets(const CliffordTGate& g, int qubits) {
  if (static_cast<int>(g.targets.size()) != arity(g.gate)) throw std::invalid_argument("wrong target count for " + g.gate);
  for (int t : g.targets)
    if (t < 0 || t >= qubits) throw std::invalid_argument("gate target out of range");
  if (g.targets.size() == 2 && g.targets[0] == g.targets[1]) throw std::invalid_argument("cnot needs distinct qubits");
}

}  // namespace

int CliffordTCircuit::t_count() const {
  return static_cast<int>(std::count_if(gates.begin(), gates.end(), [](const CliffordTGate& g) { return g.gate == "t"; }));
}

void CliffordTCircuit::validate() const {
  if (n < 1) throw std::invalid_argument("circuit needs at least one qubit");
  for (const CliffordTGate& g : gates) check_targets(g, n);
}

CliffordTCircuit clifford_t_from_json(const nlohmann::json& j) {
  CliffordTCircuit c;
  c.n = j.at("n").get<int>();
  for (const auto& g : j.at("gates")) {
    CliffordTGate gate{normalize(g.at("gate").get<std::string>()), g.at("targets").get<std::vector<int>>()};
    if (g.contains("param")) throw std::invalid_argument("gate " + gate.gate + " takes no parameter");
    c.gates.push_back(std::move(gate));
  }
  c.validate();
  return c;
}

nlohmann::json clifford_t_to_json(const CliffordTCircuit& c) {
  nlohmann::json gs = nlohmann::json::array();
  for (const CliffordTGate& g : c.gates) gs.push_back({{"gate", g.gate}, {"targets", g.targets}});
  return {{"n", c.n}, {"gates", gs}};
}

Matrix clifford_t_matrix(const CliffordTGate& g) {
  if (g.gate == "h") return gates::H().matrix();
  if (g.gate == "p") return gates::P().matrix();
  if (g.gate == "t") return gates::T().matrix();
  if (g.gate == "x") return gates::X().matrix();
  if (g.gate == "y") return gates::Y().matrix();
  if (g.gate == "z") return gates::Z().matrix();
  if (g.gate == "cnot") return gates::CNOT().matrix();
  throw std::invalid_argument("unknown gate " + g.gate);
}

void effective_key_update(PauliKeyPolynomial& keys, const CliffordTGate& g) {
  check_targets(g, keys.qubits);
  const int q = g.targets[0];
  if (g.gate == "h") {
    std::swap(keys.fa[q], keys.fb[q]);
  } else if (g.gate == "p") {
    keys.fb[q] ^= keys.fa[q];
  } else if (g.gate == "cnot") {
    const int t = g.targets[1];
    keys.fb[q] ^= keys.fb[t];
    keys.fa[t] ^= keys.fa[q];
  } else if (g.gate == "x") {
    keys.fa[q].constant ^= 1;
  } else if (g.gate == "z") {
    keys.fb[q].constant ^= 1;
  } else if (g.gate == "y") {
    keys.fa[q].constant ^= 1;
    keys.fb[q].constant ^= 1;
  } else {
    throw std::invalid_argument("key update needs a Clifford gate, got " + g.gate);
  }
}

CliffordTCircuit random_clifford_t(int n, int t_gates, int cliffords, Rng& rng) {
  static const char* kOneQubit[] = {"h", "p", "x", "z"};
  CliffordTCircuit c;
  c.n = n;
  for (int i = 0; i < cliffords; ++i) {
    const int pick = rng.uniform_int(0, n > 1 ? 4 : 3);
    if (pick == 4) {
      const int a = rng.uniform_int(0, n - 1);
      const int b = (a + rng.uniform_int(1, n - 1)) % n;
      c.gates.push_back({"cnot", {a, b}});
    } else {
      c.gates.push_back({kOneQubit[pick], {rng.uniform_int(0, n - 1)}});
    }
  }
  for (int i = 0; i < t_gates; ++i) {
    const auto at = static_cast<std::ptrdiff_t>(rng.uniform_int(0, static_cast<int>(c.gates.size())));
    c.gates.insert(c.gates.begin() + at, CliffordTGate{"t", {rng.uniform_int(0, n - 1)}});
  }
  c.validate();
  return c;
}

}  // namespace qhelab
