// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qhelab/qsim/gates.hpp"
#include "qhelab/qsim/rng.hpp"
#include "qhelab/qsim/state.hpp"

namespace qhelab {

// Low-level kernels: apply a 2^k x 2^k matrix to the given qubits of every
// column of m (rows indexed by an n-qubit basis).
void apply_matrix_left(Matrix& m, int n, const Matrix& u, const std::vector<int>& targets);
void apply_matrix(Vector& psi, int n, const Matrix& u, const std::vector<int>& targets);

void apply_gate_inplace(QuantumState& s, const Gate& g, const std::vector<int>& targets);
QuantumState apply_gate(QuantumState s, const Gate& g, const std::vector<int>& targets);

struct Measurement {
  Bit outcome = 0;
  double probability = 0.0;
  QuantumState state;
};

double outcome_probability(const QuantumState& s, Basis b, int qubit, Bit outcome);
// Forced branch; throws std::domain_error on a zero-probability outcome.
Measurement project(const QuantumState& s, Basis b, int qubit, Bit outcome);
Measurement measure(const QuantumState& s, Basis b, int qubit, Rng& rng);

struct BellMeasurement {
  // The partner of q2 holds X^mx Z^mz |psi> and needs that correction.
  Bit mx = 0;
  Bit mz = 0;
  double probability = 0.0;
  QuantumState state;
};

BellMeasurement bell_measure(const QuantumState& s, int q1, int q2, Rng& rng);

// Drops a qubit already in the given basis eigenstate.
QuantumState remove_qubit(const QuantumState& s, int qubit, Basis b, Bit outcome);
// Moves qubit `from` to position `to`, shifting the others.
QuantumState move_qubit(const QuantumState& s, int from, int to);

Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep);
Matrix reduced_density(const QuantumState& s, const std::vector<int>& keep);

double trace_distance(const Matrix& rho, const Matrix& sigma);
double classical_trace_distance(const RealVector& p, const RealVector& q);

// |<psi|phi>|^2; global phase is never compared.
double fidelity(const Vector& psi, const Vector& phi);
// <psi|rho|psi>
double fidelity(const Vector& psi, const Matrix& rho);

QuantumState random_state(int n, Rng& rng);
QuantumState random_real_state(int n, Rng& rng);
Matrix random_unitary(Eigen::Index d, Rng& rng);
RealMatrix random_orthogonal(Eigen::Index d, Rng& rng);
Matrix random_density(int n, Rng& rng);

Vector epr_pair();

}  // namespace qhelab
