// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/rebit/ydiag.hpp"

#include <cmath>
#include <stdexcept>

#include "qhelab/qsim/gates.hpp"

namespace qhelab {

namespace {

int dim_to_k(const Matrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("matrix must be square");
  int k = 0;
  while ((Eigen::Index{1} << k) < u.rows()) ++k;
  if ((Eigen::Index{1} << k) != u.rows() || k < 1) throw std::invalid_argument("matrix dimension must be 2^K");
  return k;
}

}  // namespace

Matrix y_string(GroupElement f, int K) {
  std::vector<Matrix> ops;
  for (int i = 0; i < K; ++i) ops.push_back(gates::pauli((f >> i) & 1 ? 2 : 0));
  return tensor_ops(ops);
}

Matrix y_basis(int K) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix b(2, 2);
  b << r, r, Complex(0, r), Complex(0, -r);
  return tensor_ops(std::vector<Matrix>(K, b));
}

bool is_y_diagonal(const Matrix& u, double tol) {
  const int K = dim_to_k(u);
  const Matrix b = y_basis(K);
  Matrix w = b.adjoint() * u * b;
  w.diagonal().setZero();
  return w.cwiseAbs().maxCoeff() < tol;
}

bool is_real(const Matrix& u, double tol) { return u.imag().cwiseAbs().maxCoeff() <= tol; }

YDiagExpansion ydiag_expand(const Matrix& u) {
  const int K = dim_to_k(u);
  if (!is_y_diagonal(u)) throw std::invalid_argument("matrix is not diagonal in the Y eigenbasis");
  YDiagExpansion e;
  e.K = K;
  const GroupElement count = GroupElement{1} << K;
  const double scale = 1.0 / static_cast<double>(count);
  for (GroupElement f = 0; f < count; ++f) e.c.push_back(scale * (y_string(f, K).adjoint() * u).trace());
  return e;
}

Matrix reconstruct(const YDiagExpansion& e) {
  const Eigen::Index d = Eigen::Index{1} << e.K;
  Matrix u = Matrix::Zero(d, d);
  for (GroupElement f = 0; f < e.c.size(); ++f) u += e.c[f] * y_string(f, e.K);
  return u;
}

Matrix build_c_matrix(const YDiagExpansion& e) {
  const Eigen::Index d = Eigen::Index{1} << e.K;
  if (static_cast<Eigen::Index>(e.c.size()) != d) throw std::invalid_argument("expansion size mismatch");
  Matrix c(d, d);
  for (Eigen::Index g = 0; g < d; ++g)
    for (Eigen::Index f = 0; f < d; ++f) c(g, f) = e.c[g ^ f];
  if (!is_unitary(c, 1e-9)) throw std::domain_error("C matrix is not unitary");
  return c;
}

Matrix build_remote_unitary(const YDiagExpansion& e, GroupElement gadget) {
  const GroupElement d = GroupElement{1} << e.K;
  const GroupElement held = (d - 1) & ~gadget;
  static const Complex sy[2][2] = {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}};
  Matrix m = Matrix::Zero(d, d);
  for (GroupElement r = 0; r < d; ++r)
    for (GroupElement c = 0; c < d; ++c) {
      const GroupElement shift = (r ^ c) & gadget;
      Complex acc = 0.0;
      // Sum over Y strings on the held positions.
      for (GroupElement fh = held;; fh = (fh - 1) & held) {
        Complex v = e.c[shift | fh];
        for (int i = 0; i < e.K && v != Complex(0.0); ++i) {
          if (!((held >> i) & 1)) continue;
          const int ri = (r >> i) & 1, ci = (c >> i) & 1;
          if ((fh >> i) & 1) v *= sy[ri][ci];
          else if (ri != ci) v = 0.0;
        }
        acc += v;
        if (fh == 0) break;
      }
      m(r, c) = acc;
    }
  if (!is_unitary(m, 1e-9)) throw std::domain_error("remote unitary is not unitary");
  return m;
}

Matrix random_real_ydiag(int K, Rng& rng) {
  const Eigen::Index d = Eigen::Index{1} << K;
  Vector phases(d);
  for (Eigen::Index b = 0; b < d; ++b) {
    const Eigen::Index comp = (d - 1) ^ b;
    if (b < comp) {
      const double phi = 2 * kPi * rng.uniform();
      phases(b) = std::polar(1.0, phi);
      phases(comp) = std::polar(1.0, -phi);
    }
  }
  const Matrix basis = y_basis(K);
  Matrix u = basis * phases.asDiagonal() * basis.adjoint();
  return Matrix(u.real().cast<Complex>());
}

Matrix ydiag_triple(double theta) {
  const Matrix ry = gates::Ry(kPi).matrix();
  return std::cos(theta) * Matrix::Identity(8, 8) + std::sin(theta) * tensor_ops({ry, ry, ry});
}

}  // namespace qhelab
