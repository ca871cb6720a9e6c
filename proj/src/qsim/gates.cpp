// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/qsim/gates.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "qhelab/qsim/state.hpp"

namespace qhelab {

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

Gate::Gate(std::string name, Matrix matrix) : name_(std::move(name)), matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("gate " + name_ + ": matrix must be square");
  arity_ = qubit_count_for_dim(matrix_.rows());
  if (arity_ < 1) throw std::invalid_argument("gate " + name_ + ": arity must be at least 1");
  if (!is_unitary(matrix_)) throw std::invalid_argument("gate " + name_ + ": matrix is not unitary");
}

Gate Gate::adjoint() const { return Gate(name_ + "^dg", matrix_.adjoint()); }

Matrix tensor_ops(const std::vector<Matrix>& ops) {
  Matrix out = Matrix::Identity(1, 1);
  for (const Matrix& op : ops) out = Eigen::kroneckerProduct(op, out).eval();
  return out;
}

namespace gates {

namespace {

Matrix m2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

const Complex kI(0.0, 1.0);

}  // namespace

Matrix pauli(int which) {
  switch (which) {
    case 0: return Matrix::Identity(2, 2);
    case 1: return m2(0, 1, 1, 0);
    case 2: return m2(0, -kI, kI, 0);
    case 3: return m2(1, 0, 0, -1);
  }
  throw std::invalid_argument("pauli index must be 0..3");
}

Gate I() { return Gate("i", pauli(0)); }
Gate X() { return Gate("x", pauli(1)); }
Gate Y() { return Gate("y", pauli(2)); }
Gate Z() { return Gate("z", pauli(3)); }

Gate H() {
  const double r = 1.0 / std::sqrt(2.0);
  return Gate("h", m2(r, r, r, -r));
}

Gate P() { return Gate("p", m2(1, 0, 0, kI)); }
Gate Pdg() { return Gate("pdg", m2(1, 0, 0, -kI)); }
Gate T() { return Gate("t", m2(1, 0, 0, std::polar(1.0, kPi / 4))); }
Gate Tdg() { return Gate("tdg", m2(1, 0, 0, std::polar(1.0, -kPi / 4))); }

Gate Ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return Gate("ry", m2(c, -s, s, c));
}

Gate Rz(double theta) { return Gate("rz", m2(1, 0, 0, std::polar(1.0, theta))); }

Gate Rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return Gate("rx", m2(c, -kI * s, -kI * s, c));
}

Gate controlled(const Gate& g) {
  const Eigen::Index d = g.matrix().rows();
  Matrix m = Matrix::Zero(2 * d, 2 * d);
  // index = control + 2 * target_index
  for (Eigen::Index r = 0; r < d; ++r) {
    m(2 * r, 2 * r) = 1.0;
    for (Eigen::Index c = 0; c < d; ++c) m(2 * r + 1, 2 * c + 1) = g.matrix()(r, c);
  }
  return Gate("c" + g.name(), m);
}

Gate CNOT() { return Gate("cnot", controlled(X()).matrix()); }
Gate CZ() { return Gate("cz", controlled(Z()).matrix()); }
Gate CiY() { return Gate("ciy", controlled(Gate("iy", m2(0, 1, -1, 0))).matrix()); }
Gate CRy(double theta) { return Gate("cry", controlled(Ry(theta)).matrix()); }
Gate F() { return Gate("f", CRy(kPi).matrix()); }
Gate Ty() { return Gate("ty", Ry(kPi / 4).matrix()); }

}  // namespace gates

}  // namespace qhelab
