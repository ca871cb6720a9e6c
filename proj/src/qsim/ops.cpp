// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/qsim/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qhelab {

namespace {

void check_targets(int n, const Matrix& u, const std::vector<int>& targets) {
  if (u.rows() != (Eigen::Index{1} << targets.size()) || u.cols() != u.rows())
    throw std::invalid_argument("gate arity does not match the number of targets");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n) throw std::out_of_range("target qubit out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (targets[i] == targets[j]) throw std::invalid_argument("target qubits must be distinct");
  }
}

template <class M>
void apply_rows(M& m, int n, const Matrix& u, const std::vector<int>& targets) {
  check_targets(n, u, targets);
  if (m.rows() != (Eigen::Index{1} << n)) throw std::invalid_argument("register size mismatch");
  const std::size_t k = targets.size();
  const Eigen::Index d = Eigen::Index{1} << k;
  std::vector<Eigen::Index> off(d, 0);
  Eigen::Index mask = 0;
  for (Eigen::Index l = 0; l < d; ++l)
    for (std::size_t t = 0; t < k; ++t)
      if ((l >> t) & 1) off[l] |= Eigen::Index{1} << targets[t];
  for (int t : targets) mask |= Eigen::Index{1} << t;
  Matrix block(d, m.cols());
  for (Eigen::Index base = 0; base < m.rows(); ++base) {
    if (base & mask) continue;
    for (Eigen::Index l = 0; l < d; ++l) block.row(l) = m.row(base + off[l]);
    block = (u * block).eval();
    for (Eigen::Index l = 0; l < d; ++l) m.row(base + off[l]) = block.row(l);
  }
}

void check_qubit(const QuantumState& s, int q) {
  if (q < 0 || q >= s.num_qubits()) throw std::out_of_range("qubit index out of range");
}

bool is_diagonal(const Matrix& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (r != c && m(r, c) != Complex(0.0)) return false;
  return true;
}

}  // namespace

void apply_matrix_left(Matrix& m, int n, const Matrix& u, const std::vector<int>& targets) {
  apply_rows(m, n, u, targets);
}

void apply_matrix(Vector& psi, int n, const Matrix& u, const std::vector<int>& targets) {
  apply_rows(psi, n, u, targets);
}

void apply_gate_inplace(QuantumState& s, const Gate& g, const std::vector<int>& targets) {
  const int n = s.num_qubits();
  if (static_cast<int>(targets.size()) != g.arity())
    throw std::invalid_argument("gate " + g.name() + ": arity mismatch");
  if (!s.is_density()) {
    apply_rows(s.vector(), n, g.matrix(), targets);
    return;
  }
  Matrix& rho = s.density();
  apply_rows(rho, n, g.matrix(), targets);
  Matrix t = rho.adjoint();
  apply_rows(t, n, g.matrix(), targets);
  rho = t.adjoint();
}

QuantumState apply_gate(QuantumState s, const Gate& g, const std::vector<int>& targets) {
  apply_gate_inplace(s, g, targets);
  return s;
}

double outcome_probability(const QuantumState& s, Basis b, int qubit, Bit outcome) {
  check_qubit(s, qubit);
  QuantumState t = b == Basis::X ? apply_gate(s, gates::H(), {qubit}) : s;
  const Eigen::Index bit = Eigen::Index{1} << qubit;
  double p = 0.0;
  for (Eigen::Index i = 0; i < t.dim(); ++i) {
    if (((i & bit) != 0) != (outcome != 0)) continue;
    p += t.is_density() ? t.density()(i, i).real() : std::norm(t.vector()(i));
  }
  return p;
}

Measurement project(const QuantumState& s, Basis b, int qubit, Bit outcome) {
  check_qubit(s, qubit);
  Measurement out;
  out.outcome = outcome;
  out.state = b == Basis::X ? apply_gate(s, gates::H(), {qubit}) : s;
  const Eigen::Index bit = Eigen::Index{1} << qubit;
  QuantumState& t = out.state;
  double p = 0.0;
  for (Eigen::Index i = 0; i < t.dim(); ++i) {
    const bool keep = ((i & bit) != 0) == (outcome != 0);
    if (t.is_density()) {
      if (keep) {
        p += t.density()(i, i).real();
      } else {
        t.density().row(i).setZero();
        t.density().col(i).setZero();
      }
    } else if (keep) {
      p += std::norm(t.vector()(i));
    } else {
      t.vector()(i) = 0.0;
    }
  }
  if (p < 1e-15) throw std::domain_error("zero-probability measurement branch");
  if (t.is_density())
    t.density() /= p;
  else
    t.vector() /= std::sqrt(p);
  if (b == Basis::X) apply_gate_inplace(t, gates::H(), {qubit});
  out.probability = p;
  return out;
}

Measurement measure(const QuantumState& s, Basis b, int qubit, Rng& rng) {
  const double p1 = outcome_probability(s, b, qubit, 1);
  return project(s, b, qubit, rng.branch(p1));
}

BellMeasurement bell_measure(const QuantumState& s, int q1, int q2, Rng& rng) {
  check_qubit(s, q1);
  check_qubit(s, q2);
  if (q1 == q2) throw std::invalid_argument("bell measurement needs two distinct qubits");
  QuantumState t = apply_gate(s, gates::CNOT(), {q1, q2});
  apply_gate_inplace(t, gates::H(), {q1});
  Measurement mz = measure(t, Basis::Z, q1, rng);
  Measurement mx = measure(mz.state, Basis::Z, q2, rng);
  BellMeasurement out;
  out.mz = mz.outcome;
  out.mx = mx.outcome;
  out.probability = mz.probability * mx.probability;
  out.state = std::move(mx.state);
  return out;
}

QuantumState remove_qubit(const QuantumState& s, int qubit, Basis b, Bit outcome) {
  check_qubit(s, qubit);
  QuantumState t = b == Basis::X ? apply_gate(s, gates::H(), {qubit}) : s;
  const Eigen::Index bit = Eigen::Index{1} << qubit;
  const Eigen::Index low = bit - 1;
  const Eigen::Index half = t.dim() / 2;
  auto full = [&](Eigen::Index j) {
    return (j & low) | ((j & ~low) << 1) | (outcome ? bit : 0);
  };
  std::vector<QubitLabel> labels = t.labels();
  labels.erase(labels.begin() + qubit);
  if (t.is_density()) {
    Matrix r(half, half);
    for (Eigen::Index c = 0; c < half; ++c)
      for (Eigen::Index rr = 0; rr < half; ++rr) r(rr, c) = t.density()(full(rr), full(c));
    if (std::abs(r.trace().real() - 1.0) > 1e-9) throw std::domain_error("qubit is not in the stated eigenstate");
    return with_labels(QuantumState::from_density(std::move(r)), std::move(labels));
  }
  Vector v(half);
  for (Eigen::Index j = 0; j < half; ++j) v(j) = t.vector()(full(j));
  if (std::abs(v.squaredNorm() - 1.0) > 1e-9) throw std::domain_error("qubit is not in the stated eigenstate");
  return with_labels(QuantumState::from_vector(std::move(v)), std::move(labels));
}

QuantumState move_qubit(const QuantumState& s, int from, int to) {
  check_qubit(s, from);
  check_qubit(s, to);
  const int n = s.num_qubits();
  std::vector<int> order(n);  // order[new] = old
  for (int i = 0; i < n; ++i) order[i] = i;
  order.erase(order.begin() + from);
  order.insert(order.begin() + to, from);
  auto old_index = [&](Eigen::Index j) {
    Eigen::Index o = 0;
    for (int q = 0; q < n; ++q)
      if ((j >> q) & 1) o |= Eigen::Index{1} << order[q];
    return o;
  };
  std::vector<QubitLabel> labels(n);
  for (int q = 0; q < n; ++q) labels[q] = s.labels()[order[q]];
  if (s.is_density()) {
    Matrix r(s.dim(), s.dim());
    for (Eigen::Index c = 0; c < s.dim(); ++c)
      for (Eigen::Index rr = 0; rr < s.dim(); ++rr) r(rr, c) = s.density()(old_index(rr), old_index(c));
    return with_labels(QuantumState::from_density(std::move(r)), std::move(labels));
  }
  Vector v(s.dim());
  for (Eigen::Index j = 0; j < s.dim(); ++j) v(j) = s.vector()(old_index(j));
  return with_labels(QuantumState::from_vector(std::move(v)), std::move(labels));
}

namespace {

struct Split {
  std::vector<int> keep, traced;
  std::vector<Eigen::Index> keep_off, traced_off;
};

Split make_split(int n, std::vector<int> keep) {
  if (keep.empty()) throw std::invalid_argument("partial trace needs a nonempty keep set");
  std::sort(keep.begin(), keep.end());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n) throw std::out_of_range("kept qubit out of range");
    if (i && keep[i] == keep[i - 1]) throw std::invalid_argument("duplicate kept qubit");
  }
  Split sp;
  sp.keep = keep;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(keep.begin(), keep.end(), q)) sp.traced.push_back(q);
  auto offsets = [](const std::vector<int>& qs) {
    std::vector<Eigen::Index> off(Eigen::Index{1} << qs.size(), 0);
    for (std::size_t l = 0; l < off.size(); ++l)
      for (std::size_t t = 0; t < qs.size(); ++t)
        if ((l >> t) & 1) off[l] |= Eigen::Index{1} << qs[t];
    return off;
  };
  sp.keep_off = offsets(sp.keep);
  sp.traced_off = offsets(sp.traced);
  return sp;
}

}  // namespace

Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  const int n = qubit_count_for_dim(rho.rows());
  const Split sp = make_split(n, keep);
  const Eigen::Index dk = sp.keep_off.size();
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index c = 0; c < dk; ++c)
    for (Eigen::Index r = 0; r < dk; ++r) {
      Complex acc = 0.0;
      for (Eigen::Index e : sp.traced_off) acc += rho(sp.keep_off[r] + e, sp.keep_off[c] + e);
      out(r, c) = acc;
    }
  return out;
}

Matrix reduced_density(const QuantumState& s, const std::vector<int>& keep) {
  if (s.is_density()) return partial_trace(s.density(), keep);
  const Split sp = make_split(s.num_qubits(), keep);
  if (static_cast<int>(sp.keep.size()) > kMaxDensityQubits)
    throw std::invalid_argument("reduced density exceeds the 12-qubit cap");
  Matrix a(sp.keep_off.size(), sp.traced_off.size());
  for (std::size_t e = 0; e < sp.traced_off.size(); ++e)
    for (std::size_t r = 0; r < sp.keep_off.size(); ++r) a(r, e) = s.vector()(sp.keep_off[r] + sp.traced_off[e]);
  return a * a.adjoint();
}

double trace_distance(const Matrix& rho, const Matrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("trace distance: dimension mismatch");
  Matrix d = rho - sigma;
  if (is_diagonal(d)) return 0.5 * d.diagonal().cwiseAbs().sum();
  Eigen::SelfAdjointEigenSolver<Matrix> es(d, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double classical_trace_distance(const RealVector& p, const RealVector& q) {
  if (p.size() != q.size()) throw std::invalid_argument("trace distance: dimension mismatch");
  return 0.5 * (p - q).cwiseAbs().sum();
}

double fidelity(const Vector& psi, const Vector& phi) {
  if (psi.size() != phi.size()) throw std::invalid_argument("fidelity: dimension mismatch");
  return std::norm(psi.dot(phi));
}

double fidelity(const Vector& psi, const Matrix& rho) {
  if (psi.size() != rho.rows()) throw std::invalid_argument("fidelity: dimension mismatch");
  return psi.dot(rho * psi).real();
}

QuantumState random_state(int n, Rng& rng) {
  Vector v(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(rng.normal(), rng.normal());
  return QuantumState::from_vector(v / v.norm());
}

QuantumState random_real_state(int n, Rng& rng) {
  Vector v(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.normal();
  return QuantumState::from_vector(v / v.norm());
}

Matrix random_unitary(Eigen::Index d, Rng& rng) {
  Matrix g(d, d);
  for (Eigen::Index c = 0; c < d; ++c)
    for (Eigen::Index r = 0; r < d; ++r) g(r, c) = Complex(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

RealMatrix random_orthogonal(Eigen::Index d, Rng& rng) {
  RealMatrix g(d, d);
  for (Eigen::Index c = 0; c < d; ++c)
    for (Eigen::Index r = 0; r < d; ++r) g(r, c) = rng.normal();
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  return q;
}

Matrix random_density(int n, Rng& rng) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix g(d, d);
  for (Eigen::Index c = 0; c < d; ++c)
    for (Eigen::Index r = 0; r < d; ++r) g(r, c) = Complex(rng.normal(), rng.normal());
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

Vector epr_pair() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace qhelab
