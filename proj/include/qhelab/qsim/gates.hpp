// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "qhelab/qsim/types.hpp"

namespace qhelab {

class Gate {
 public:
  // Throws std::invalid_argument if the matrix is not a unitary on k qubits.
  Gate(std::string name, Matrix matrix);

  const std::string& name() const { return name_; }
  const Matrix& matrix() const { return matrix_; }
  int arity() const { return arity_; }
  Gate adjoint() const;

 private:
  std::string name_;
  Matrix matrix_;
  int arity_ = 0;
};

// Kronecker product with ops[0] on the least-significant qubit.
Matrix tensor_ops(const std::vector<Matrix>& ops);

bool is_unitary(const Matrix& m, double tol = 1e-10);

namespace gates {

Gate I();
Gate X();
Gate Y();
Gate Z();
Gate H();
Gate P();
Gate Pdg();
Gate T();
Gate Tdg();
// Local qubit 0 controls, local qubit 1 is the target.
Gate CNOT();
Gate CZ();
// R_y(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
Gate Ry(double theta);
// R_z(t) = diag(1, e^{it}).
Gate Rz(double theta);
Gate Rx(double theta);
// Control on local qubit 0; applies i*sigma_y = [[0,1],[-1,0]] to local qubit 1.
Gate CiY();
// F(pi/2): controlled-R_y(pi).
Gate F();
Gate Ty();
Gate CRy(double theta);
// Controlled version of g; the control is local qubit 0.
Gate controlled(const Gate& g);

Matrix pauli(int which);  // 0=I, 1=X, 2=Y, 3=Z

}  // namespace gates

}  // namespace qhelab
