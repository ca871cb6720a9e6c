// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/qsim/info.hpp"

#include <cmath>
#include <stdexcept>

namespace qhelab {

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

double binary_entropy(double p) { return plogp(p) + plogp(1.0 - p); }

double shannon_entropy(const RealVector& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) h += plogp(p(i));
  return h;
}

double von_neumann_entropy(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  return shannon_entropy(es.eigenvalues().cwiseMax(0.0));
}

double mutual_information(const RealMatrix& joint) {
  if (joint.size() == 0) throw std::invalid_argument("empty probability table");
  if (joint.minCoeff() < -1e-12) throw std::invalid_argument("negative probability in table");
  if (std::abs(joint.sum() - 1.0) > 1e-9) throw std::invalid_argument("probability table is not normalized");
  const RealVector px = joint.rowwise().sum();
  const RealVector py = joint.colwise().sum().transpose();
  double hxy = 0.0;
  for (Eigen::Index c = 0; c < joint.cols(); ++c)
    for (Eigen::Index r = 0; r < joint.rows(); ++r) hxy += plogp(joint(r, c));
  return shannon_entropy(px) + shannon_entropy(py) - hxy;
}

double holevo(const Ensemble& ensemble) {
  if (ensemble.empty()) throw std::invalid_argument("empty ensemble");
  const Eigen::Index d = ensemble.front().second.rows();
  double total = 0.0, inner = 0.0;
  Matrix avg = Matrix::Zero(d, d);
  for (const auto& [p, rho] : ensemble) {
    if (p < 0.0) throw std::invalid_argument("negative ensemble weight");
    if (rho.rows() != d || rho.cols() != d) throw std::invalid_argument("ensemble dimension mismatch");
    total += p;
    avg += p * rho;
    if (p > 0.0) inner += p * von_neumann_entropy(rho);
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("ensemble weights do not sum to 1");
  return von_neumann_entropy(avg) - inner;
}

}  // namespace qhelab
