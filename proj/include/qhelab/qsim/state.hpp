// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "qhelab/qsim/types.hpp"

namespace qhelab {

struct QubitLabel {
  Party owner = Party::Alice;
  std::string role;
};

// Statevector or density matrix over a little-endian register: qubit 0 is
// the least-significant bit of the basis index.
class QuantumState {
 public:
  QuantumState() = default;

  static QuantumState basis(int n, std::uint64_t index);
  static QuantumState from_vector(Vector amplitudes);
  static QuantumState from_density(Matrix rho);

  int num_qubits() const { return n_; }
  Eigen::Index dim() const { return Eigen::Index{1} << n_; }
  bool is_density() const { return density_; }

  const Vector& vector() const;
  Vector& vector();
  const Matrix& density() const;
  Matrix& density();

  Matrix to_density() const;
  QuantumState as_density() const;

  const std::vector<QubitLabel>& labels() const { return labels_; }
  Party owner(int q) const;
  void set_owner(int q, Party p);
  void set_role(int q, std::string role);

  // Throws std::domain_error when the representation invariants fail.
  void validate(double tol = kNormTol) const;

 private:
  int n_ = 0;
  bool density_ = false;
  Vector psi_;
  Matrix rho_;
  std::vector<QubitLabel> labels_;

  friend QuantumState tensor(const QuantumState& low, const QuantumState& high);
  friend QuantumState with_labels(QuantumState s, std::vector<QubitLabel> labels);
};

// Register with `low` on the lower qubit indices and `high` above.
QuantumState tensor(const QuantumState& low, const QuantumState& high);
QuantumState with_labels(QuantumState s, std::vector<QubitLabel> labels);

int qubit_count_for_dim(Eigen::Index dim);

}  // namespace qhelab
