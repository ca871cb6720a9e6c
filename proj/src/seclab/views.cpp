// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/seclab/views.hpp"

#include <cmath>
#include <stdexcept>

#include "qhelab/linpoly/classical.hpp"
#include "qhelab/linpoly/locking.hpp"
#include "qhelab/linpoly/pair_schemes.hpp"
#include "qhelab/qsim/ops.hpp"
#include "common.hpp"

namespace qhelab {

ViewScheme view_scheme_from_id(int id) {
  switch (id) {
    case 4: return ViewScheme::Scheme4;
    case 7: return ViewScheme::Scheme7;
    case 8: return ViewScheme::Scheme8;
    case 10: return ViewScheme::Scheme10;
    default: throw std::invalid_argument("no Bob view for scheme " + std::to_string(id));
  }
}

namespace seclab_detail {

std::vector<Bit> bits_of(std::uint64_t v, int n) {
  std::vector<Bit> b(n);
  for (int i = 0; i < n; ++i) b[i] = (v >> i) & 1;
  return b;
}

std::vector<std::vector<Bit>> split_values(const std::vector<Bit>& x, int k, std::uint64_t free) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<Bit>> v(n, std::vector<Bit>(k));
  int at = 0;
  for (int i = 0; i < n; ++i) {
    Bit acc = x[i];
    for (int j = 0; j + 1 < k; ++j) {
      v[i][j] = (free >> at++) & 1;
      acc ^= v[i][j];
    }
    v[i][k - 1] = acc;
  }
  return v;
}

void check_params(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

int groups_of(int n, int group) {
  if (group < 1 || group > n) throw std::invalid_argument("group size must lie in [1, n]");
  return (n + group - 1) / group;
}

RealVector pair_conditional(const std::vector<Bit>& x, int k, int group, std::uint64_t s) {
  const int n = static_cast<int>(x.size());
  const int groups = groups_of(n, group);
  const int pairs = n * k;
  if (2 * pairs > kMaxStateQubits) throw std::length_error("pair view too large");
  RealVector dist = RealVector::Zero(Eigen::Index{1} << (2 * pairs));
  const std::uint64_t splits = std::uint64_t{1} << (n * (k - 1));
  const double w = 1.0 / (static_cast<double>(splits) * std::ldexp(1.0, pairs));
  for (std::uint64_t f = 0; f < splits; ++f) {
    const auto v = split_values(x, k, f);
    for (std::uint64_t other = 0; other < (std::uint64_t{1} << pairs); ++other) {
      Eigen::Index idx = 0;
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) {
          const int p = j * n + i;
          const Bit basis = (s >> (j * groups + i / group)) & 1;
          const Bit free_bit = (other >> p) & 1;
          // The value lands in the Z outcome for basis 0, the X outcome for basis 1.
          const Bit o0 = basis ? free_bit : v[i][j];
          const Bit o1 = basis ? v[i][j] : free_bit;
          idx |= (Eigen::Index{o0} << (2 * p)) | (Eigen::Index{o1} << (2 * p + 1));
        }
      dist(idx) += w;
    }
  }
  return dist;
}

}  // namespace seclab_detail

using namespace seclab_detail;

RealVector pair_view_distribution(const std::vector<Bit>& x, int k, int group) {
  const int n = static_cast<int>(x.size());
  check_params(n, k);
  const int basis_bits = groups_of(n, group) * k;
  RealVector dist;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << basis_bits); ++s) {
    RealVector d = pair_conditional(x, k, group, s);
    dist = s ? RealVector(dist + d) : d;
  }
  return dist / std::ldexp(1.0, basis_bits);
}

namespace {

Matrix outer(const Vector& v) { return v * v.adjoint(); }

Vector stack(const std::vector<Vector>& parts) {
  Vector v = parts.front();
  for (std::size_t p = 1; p < parts.size(); ++p) {
    Vector w(v.size() * parts[p].size());
    for (Eigen::Index hi = 0; hi < parts[p].size(); ++hi) w.segment(hi * v.size(), v.size()) = parts[p](hi) * v;
    v = std::move(w);
  }
  return v;
}

}  // namespace

Matrix pair_view_dense(const std::vector<Bit>& x, int k, int group) {
  const int n = static_cast<int>(x.size());
  check_params(n, k);
  if (2 * n * k > 8) throw std::length_error("dense pair view capped at 8 qubits");
  const Eigen::Index dim = Eigen::Index{1} << (2 * n * k);
  Matrix rho = Matrix::Zero(dim, dim);
  enumerate_tapes([&](Rng& rng) {
    std::vector<PreparedPair> pairs = prepare_pairs(x, k, group, rng);
    std::vector<Vector> parts;
    for (const PreparedPair& p : pairs) parts.push_back(p.state.vector());
    rho += rng.weight() * outer(stack(parts));
  });
  return rho;
}

Matrix pair_frame_density(const RealVector& dist, int pairs) {
  if (dist.size() != (Eigen::Index{1} << (2 * pairs))) throw std::invalid_argument("distribution size mismatch");
  if (2 * pairs > 10) throw std::length_error("pair frame density capped at 10 qubits");
  const double h = 1.0 / std::sqrt(2.0);
  Matrix rho = Matrix::Zero(dist.size(), dist.size());
  for (Eigen::Index idx = 0; idx < dist.size(); ++idx) {
    if (dist(idx) == 0.0) continue;
    std::vector<Vector> parts;
    for (int p = 0; p < pairs; ++p) {
      const int o0 = (idx >> (2 * p)) & 1, o1 = (idx >> (2 * p + 1)) & 1;
      Vector local = Vector::Zero(4);
      local(o0) = h;                         // second qubit |+>
      local(o0 + 2) = o1 ? -h : h;           // or |->
      parts.push_back(local);
    }
    rho += dist(idx) * outer(stack(parts));
  }
  return rho;
}

Matrix locking_view_dense(const std::vector<Bit>& x, int k) {
  const int n = static_cast<int>(x.size());
  check_params(n, k);
  if (k * (n + 1) > 10) throw std::length_error("dense locking view capped at 10 qubits");
  const Eigen::Index dim = Eigen::Index{1} << (k * (n + 1));
  Matrix rho = Matrix::Zero(dim, dim);
  enumerate_tapes([&](Rng& rng) {
    LockingPreparation prep = prepare_locking(x, k, rng);
    std::vector<Vector> parts;
    for (const QuantumState& b : prep.blocks) parts.push_back(b.vector());
    rho += rng.weight() * outer(stack(parts));
  });
  return rho;
}

RealVector classical_view(const std::vector<Bit>& x, int k) {
  const int n = static_cast<int>(x.size());
  check_params(n, k);
  if (2 * n * k > kMaxStateQubits) throw std::length_error("classical view too large");
  RealVector dist = RealVector::Zero(Eigen::Index{1} << (2 * n * k));
  const LinearPolynomial zero = LinearPolynomial::zero(n);
  enumerate_tapes([&](Rng& rng) {
    const LinpolyRun run = run_scheme10(x, zero, k, rng);
    const BitString& bits = run.transcript.messages().front().bits;
    Eigen::Index idx = 0;
    for (std::size_t b = 0; b < bits.size(); ++b) idx |= Eigen::Index{bits[b]} << b;
    dist(idx) += rng.weight();
  });
  return dist;
}

namespace {

int view_qubits(ViewScheme s, int n, int k) { return s == ViewScheme::Scheme8 ? k * (n + 1) : 2 * n * k; }

// One input's view; pair and classical views as distributions, locking dense.
void add_view(BobView& v, const std::vector<Bit>& x, double weight) {
  switch (v.scheme) {
    case ViewScheme::Scheme4:
    case ViewScheme::Scheme7: {
      const RealVector d = pair_view_distribution(x, v.k, v.scheme == ViewScheme::Scheme4 ? 1 : v.n);
      v.distribution = v.distribution.size() ? RealVector(v.distribution + weight * d) : RealVector(weight * d);
      break;
    }
    case ViewScheme::Scheme10: {
      const RealVector d = classical_view(x, v.k);
      v.distribution = v.distribution.size() ? RealVector(v.distribution + weight * d) : RealVector(weight * d);
      break;
    }
    case ViewScheme::Scheme8: {
      const Matrix d = locking_view_dense(x, v.k);
      v.density = v.density.size() ? Matrix(v.density + weight * d) : Matrix(weight * d);
      break;
    }
  }
}

}  // namespace

BobView bob_view(ViewScheme scheme, int n, int k, const std::optional<std::vector<Bit>>& input) {
  check_params(n, k);
  BobView v;
  v.scheme = scheme;
  v.n = n;
  v.k = k;
  v.input = input;
  v.qubits = view_qubits(scheme, n, k);
  if (v.qubits > kMaxDensityQubits) throw std::length_error("view exceeds the 12-qubit cap");
  v.diagonal = scheme != ViewScheme::Scheme8;
  if (input) {
    if (static_cast<int>(input->size()) != n) throw std::invalid_argument("input length must equal n");
    add_view(v, *input, 1.0);
  } else {
    const double w = std::ldexp(1.0, -n);
    for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << n); ++xv) add_view(v, bits_of(xv, n), w);
  }
  return v;
}

Matrix view_density(const BobView& v) {
  if (!v.diagonal) return v.density;
  if (v.scheme == ViewScheme::Scheme10) {
    if (v.qubits > 10) throw std::length_error("view density capped at 10 qubits");
    return v.distribution.cast<Complex>().asDiagonal();
  }
  return pair_frame_density(v.distribution, v.n * v.k);
}

namespace {

double view_distance(const BobView& a, const BobView& b) {
  return a.diagonal ? classical_trace_distance(a.distribution, b.distribution) : trace_distance(a.density, b.density);
}

BobView mixture(ViewScheme scheme, int n, int k, int i, Bit value) {
  BobView v;
  v.scheme = scheme;
  v.n = n;
  v.k = k;
  v.qubits = view_qubits(scheme, n, k);
  v.diagonal = scheme != ViewScheme::Scheme8;
  const double w = std::ldexp(1.0, -(n - 1));
  for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << n); ++xv) {
    const auto x = bits_of(xv, n);
    if (x[i] == value) add_view(v, x, w);
  }
  return v;
}

}  // namespace

double privacy_distance(ViewScheme scheme, int n, int k, const std::vector<Bit>& a, const std::vector<Bit>& b) {
  return view_distance(bob_view(scheme, n, k, a), bob_view(scheme, n, k, b));
}

double per_bit_distance(ViewScheme scheme, int n, int k, int i) {
  check_params(n, k);
  if (i < 0 || i >= n) throw std::out_of_range("bit index out of range");
  if (view_qubits(scheme, n, k) > kMaxDensityQubits) throw std::length_error("view exceeds the 12-qubit cap");
  return view_distance(mixture(scheme, n, k, i, 0), mixture(scheme, n, k, i, 1));
}

RealVector marginal(const RealVector& dist, const std::vector<int>& keep) {
  RealVector out = RealVector::Zero(Eigen::Index{1} << keep.size());
  for (Eigen::Index idx = 0; idx < dist.size(); ++idx) {
    Eigen::Index m = 0;
    for (std::size_t b = 0; b < keep.size(); ++b) m |= ((idx >> keep[b]) & 1) << b;
    out(m) += dist(idx);
  }
  return out;
}

double factorization_gap(const std::vector<Bit>& x, int k, int group) {
  const int n = static_cast<int>(x.size());
  const RealVector joint = pair_view_distribution(x, k, group);
  std::vector<std::vector<int>> bits(n);
  std::vector<RealVector> marg;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      bits[i].push_back(2 * (j * n + i));
      bits[i].push_back(2 * (j * n + i) + 1);
    }
    marg.push_back(marginal(joint, bits[i]));
  }
  RealVector product(joint.size());
  for (Eigen::Index idx = 0; idx < joint.size(); ++idx) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) {
      Eigen::Index m = 0;
      for (std::size_t b = 0; b < bits[i].size(); ++b) m |= ((idx >> bits[i][b]) & 1) << b;
      p *= marg[i](m);
    }
    product(idx) = p;
  }
  return classical_trace_distance(joint, product);
}

}  // namespace qhelab
