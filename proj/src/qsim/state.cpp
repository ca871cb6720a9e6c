// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/qsim/state.hpp"

#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qhelab {

int qubit_count_for_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) throw std::invalid_argument("dimension is not a power of two");
  return n;
}

QuantumState QuantumState::basis(int n, std::uint64_t index) {
  if (n < 0 || n > kMaxStateQubits) throw std::invalid_argument("qubit count out of range");
  Vector v = Vector::Zero(Eigen::Index{1} << n);
  if (static_cast<Eigen::Index>(index) >= v.size()) throw std::out_of_range("basis index out of range");
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return from_vector(std::move(v));
}

QuantumState QuantumState::from_vector(Vector amplitudes) {
  QuantumState s;
  s.n_ = qubit_count_for_dim(amplitudes.size());
  if (s.n_ > kMaxStateQubits) throw std::invalid_argument("statevector exceeds the 24-qubit cap");
  s.psi_ = std::move(amplitudes);
  s.labels_.assign(s.n_, QubitLabel{});
  return s;
}

QuantumState QuantumState::from_density(Matrix rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  QuantumState s;
  s.n_ = qubit_count_for_dim(rho.rows());
  if (s.n_ > kMaxDensityQubits) throw std::invalid_argument("density matrix exceeds the 12-qubit cap");
  s.density_ = true;
  s.rho_ = std::move(rho);
  s.labels_.assign(s.n_, QubitLabel{});
  return s;
}

const Vector& QuantumState::vector() const {
  if (density_) throw std::logic_error("state is in density representation");
  return psi_;
}

Vector& QuantumState::vector() {
  if (density_) throw std::logic_error("state is in density representation");
  return psi_;
}

const Matrix& QuantumState::density() const {
  if (!density_) throw std::logic_error("state is in statevector representation");
  return rho_;
}

Matrix& QuantumState::density() {
  if (!density_) throw std::logic_error("state is in statevector representation");
  return rho_;
}

Matrix QuantumState::to_density() const {
  if (density_) return rho_;
  if (n_ > kMaxDensityQubits) throw std::invalid_argument("density matrix exceeds the 12-qubit cap");
  return psi_ * psi_.adjoint();
}

QuantumState QuantumState::as_density() const {
  QuantumState s = from_density(to_density());
  s.labels_ = labels_;
  return s;
}

Party QuantumState::owner(int q) const { return labels_.at(q).owner; }
void QuantumState::set_owner(int q, Party p) { labels_.at(q).owner = p; }
void QuantumState::set_role(int q, std::string role) { labels_.at(q).role = std::move(role); }

void QuantumState::validate(double tol) const {
  if (!density_) {
    if (std::abs(psi_.norm() - 1.0) > tol) throw std::domain_error("statevector is not normalized");
    return;
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol) throw std::domain_error("density matrix is not Hermitian");
  if (std::abs(rho_.trace() - Complex(1.0)) > tol) throw std::domain_error("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdTol) throw std::domain_error("density matrix is not positive semidefinite");
}

QuantumState tensor(const QuantumState& low, const QuantumState& high) {
  QuantumState s;
  s.n_ = low.n_ + high.n_;
  if (low.density_ || high.density_) {
    if (s.n_ > kMaxDensityQubits) throw std::invalid_argument("density matrix exceeds the 12-qubit cap");
    s.density_ = true;
    s.rho_ = Eigen::kroneckerProduct(high.to_density(), low.to_density()).eval();
  } else {
    if (s.n_ > kMaxStateQubits) throw std::invalid_argument("statevector exceeds the 24-qubit cap");
    s.psi_ = Eigen::kroneckerProduct(high.psi_, low.psi_).eval();
  }
  s.labels_ = low.labels_;
  s.labels_.insert(s.labels_.end(), high.labels_.begin(), high.labels_.end());
  return s;
}

QuantumState with_labels(QuantumState s, std::vector<QubitLabel> labels) {
  if (static_cast<int>(labels.size()) != s.n_) throw std::invalid_argument("label count mismatch");
  s.labels_ = std::move(labels);
  return s;
}

}  // namespace qhelab
