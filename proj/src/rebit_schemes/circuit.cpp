// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/rebit_schemes/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "qhelab/qsim/gates.hpp"
#include "qhelab/qsim/ops.hpp"
#include "qhelab/qsim/state.hpp"
#include "qhelab/rebit/encoding.hpp"
#include "qhelab/rebit/ydiag.hpp"

namespace qhelab {

void validate_circuit(const AlmostCommutingCircuit& c, RebitScheme scheme) {
  if (c.n < 1) throw InvalidCircuit("circuit needs at least one data qubit");
  for (const Layer& layer : c.layers) {
    if (const auto* rz = std::get_if<RzLayer>(&layer)) {
      if (rz->j != 1 && rz->j != 3) throw InvalidCircuit("R_z layers take j in {1, 3}");
      if (rz->qubit < 0 || rz->qubit >= c.n) throw InvalidCircuit("R_z target out of range");
      if (scheme == RebitScheme::One && rz->qubit != 0) throw InvalidCircuit("R_z layers act on the first data qubit only");
      continue;
    }
    const auto& y = std::get<YdiagLayer>(layer);
    if (y.qubits.empty()) throw InvalidCircuit("Y-diagonal layer needs qubits");
    std::vector<int> q = y.qubits;
    std::sort(q.begin(), q.end());
    if (std::adjacent_find(q.begin(), q.end()) != q.end()) throw InvalidCircuit("duplicate qubit in layer");
    if (q.front() < 0 || q.back() >= c.n) throw InvalidCircuit("layer qubit out of range");
    if (scheme == RebitScheme::Two && static_cast<int>(q.size()) != c.n)
      throw InvalidCircuit("Y-diagonal layers act on all data qubits");
    if (y.unitary.rows() != (Eigen::Index{1} << y.qubits.size()) || !is_unitary(y.unitary, 1e-9))
      throw InvalidCircuit("layer matrix is not a unitary of the right size");
    if (!is_real(y.unitary) || !is_y_diagonal(y.unitary)) throw InvalidCircuit("layer is not a real Y-diagonal unitary");
  }
}

void validate_input(const Vector& physical, int n, RebitScheme scheme) {
  if (physical.size() != (Eigen::Index{2} << n)) throw InvalidInput("input must cover n data qubits and the phase qubit");
  if (std::abs(physical.norm() - 1.0) > 1e-9) throw InvalidInput("input is not normalized");
  if (!is_real(physical)) throw InvalidInput("input amplitudes must be real");
  if (scheme == RebitScheme::Two) return;
  // Data qubits after the first must be unentangled from everything else.
  QuantumState s = QuantumState::from_vector(physical);
  for (int q = 1; q < n; ++q) {
    Matrix r = reduced_density(s, {q});
    if ((r * r).trace().real() < 1.0 - 1e-9) throw InvalidInput("input is not a product state across data qubits");
  }
}

AlmostCommutingCircuit random_almost_commuting(int n, int depth, RebitScheme scheme, Rng& rng) {
  if (n < 1 || depth < 0) throw InvalidCircuit("random circuit needs n >= 1 and depth >= 0");
  AlmostCommutingCircuit c{n, {}};
  for (int l = 0; l < depth; ++l) {
    if (rng.uniform_int(0, 2) == 0) {
      const int q = scheme == RebitScheme::One ? 0 : rng.uniform_int(0, n - 1);
      c.layers.push_back(RzLayer{q, rng.bit() ? 3 : 1});
      continue;
    }
    std::vector<int> qubits;
    if (scheme == RebitScheme::Two) {
      for (int q = 0; q < n; ++q) qubits.push_back(q);
    } else {
      const int mask = rng.uniform_int(1, (1 << n) - 1);
      for (int q = 0; q < n; ++q)
        if ((mask >> q) & 1) qubits.push_back(q);
    }
    const int size = static_cast<int>(qubits.size());
    c.layers.push_back(YdiagLayer{std::move(qubits), random_real_ydiag(size, rng)});
  }
  return c;
}

Vector random_rebit_input(int n, RebitScheme scheme, Rng& rng) {
  if (n < 1) throw InvalidInput("input needs at least one data qubit");
  if (scheme == RebitScheme::Two) return rebit_encode(random_state(n, rng).vector());
  Vector logical = random_state(1, rng).vector();
  for (int q = 1; q < n; ++q) {
    const double t = 2 * kPi * rng.uniform();
    Vector r(2);
    r << std::cos(t), std::sin(t);
    Vector w(logical.size() * 2);
    w.head(logical.size()) = r(0) * logical;
    w.tail(logical.size()) = r(1) * logical;
    logical = std::move(w);
  }
  return rebit_encode(logical);
}

Vector simulate_physical(const AlmostCommutingCircuit& c, const Vector& physical) {
  Vector v = physical;
  const int nq = c.n + 1;
  for (const Layer& layer : c.layers) {
    if (const auto* rz = std::get_if<RzLayer>(&layer))
      apply_matrix(v, nq, gates::CRy(rz->j * kPi).matrix(), {rz->qubit, c.n});
    else
      apply_matrix(v, nq, std::get<YdiagLayer>(layer).unitary, std::get<YdiagLayer>(layer).qubits);
  }
  return v;
}

namespace {

Matrix real_matrix_from_json(const nlohmann::json& rows) {
  const Eigen::Index d = static_cast<Eigen::Index>(rows.size());
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    if (rows[r].size() != rows.size()) throw InvalidCircuit("matrix must be square");
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = rows[r][c].get<double>();
  }
  return m;
}

}  // namespace

AlmostCommutingCircuit circuit_from_json(const nlohmann::json& j) {
  AlmostCommutingCircuit c;
  c.n = j.at("n").get<int>();
  for (const auto& lj : j.at("layers")) {
    const std::string type = lj.at("type").get<std::string>();
    if (type == "rz") {
      c.layers.push_back(RzLayer{lj.at("qubit").get<int>(), lj.at("j").get<int>()});
      continue;
    }
    if (type != "ydiag") throw InvalidCircuit("unknown layer type " + type);
    YdiagLayer y;
    y.qubits = lj.at("qubits").get<std::vector<int>>();
    if (lj.contains("matrix")) {
      y.unitary = real_matrix_from_json(lj.at("matrix"));
    } else {
      const std::string gen = lj.at("generator").get<std::string>();
      const double theta = lj.value("theta", 0.0);
      if (gen == "ry" && y.qubits.size() == 1) y.unitary = gates::Ry(theta).matrix();
      else if (gen == "triple" && y.qubits.size() == 3) y.unitary = ydiag_triple(theta);
      else throw InvalidCircuit("unknown generator " + gen + " for this layer size");
    }
    c.layers.push_back(std::move(y));
  }
  return c;
}

nlohmann::json circuit_to_json(const AlmostCommutingCircuit& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["layers"] = nlohmann::json::array();
  for (const Layer& layer : c.layers) {
    if (const auto* rz = std::get_if<RzLayer>(&layer)) {
      j["layers"].push_back({{"type", "rz"}, {"qubit", rz->qubit}, {"j", rz->j}});
      continue;
    }
    const auto& y = std::get<YdiagLayer>(layer);
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < y.unitary.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index col = 0; col < y.unitary.cols(); ++col) row.push_back(y.unitary(r, col).real());
      rows.push_back(row);
    }
    j["layers"].push_back({{"type", "ydiag"}, {"qubits", y.qubits}, {"matrix", rows}});
  }
  return j;
}

}  // namespace qhelab
