// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qhelab/qsim/types.hpp"
#include "qhelab/qsim/rng.hpp"

namespace qhelab {

// Real Y-diagonal unitary on data qubits; qubits[i] is local qubit i of the matrix.
struct YdiagLayer {
  std::vector<int> qubits;
  Matrix unitary;
};

// Logical R_z(j pi/2), j in {1, 3}.
struct RzLayer {
  int qubit = 0;
  int j = 1;
};

using Layer = std::variant<YdiagLayer, RzLayer>;

struct AlmostCommutingCircuit {
  int n = 0;
  std::vector<Layer> layers;
};

enum class RebitScheme { One, Two };

class InvalidCircuit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate_circuit(const AlmostCommutingCircuit& c, RebitScheme scheme);
// Physical input on n data qubits plus the phase qubit (highest index).
void validate_input(const Vector& physical, int n, RebitScheme scheme);

// Direct simulation on the physical register: Y-diagonal layers act as given,
// R_z layers as controlled-R_y(j pi) onto the phase qubit.
Vector simulate_physical(const AlmostCommutingCircuit& c, const Vector& physical);

// JSON: {"n": 2, "layers": [{"type": "ydiag", "qubits": [0, 1], "matrix": [[...]]},
//        {"type": "ydiag", "qubits": [0, 1, 2], "generator": "triple", "theta": 0.3},
//        {"type": "rz", "qubit": 0, "j": 1}]}
// Random circuit of `depth` layers: real Y-diagonal unitaries (all data
// qubits for scheme 2, a random nonempty subset for scheme 1) mixed with
// R_z(j pi/2) layers (first data qubit only for scheme 1).
AlmostCommutingCircuit random_almost_commuting(int n, int depth, RebitScheme scheme, Rng& rng);
// Random allowed physical input. Scheme 1: rebit-encoded complex first qubit
// times real qubits; scheme 2: any rebit-encoded complex state.
Vector random_rebit_input(int n, RebitScheme scheme, Rng& rng);

AlmostCommutingCircuit circuit_from_json(const nlohmann::json& j);
nlohmann::json circuit_to_json(const AlmostCommutingCircuit& c);

}  // namespace qhelab
