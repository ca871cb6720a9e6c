// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/seclab/info.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "common.hpp"
#include "qhelab/linpoly/polynomial.hpp"
#include "qhelab/qsim/gates.hpp"
#include "qhelab/qsim/info.hpp"
#include "qhelab/qsim/ops.hpp"

namespace qhelab {

using namespace seclab_detail;

OutcomeTable pair_outcome_table(int n, int k, int group) {
  check_params(n, k);
  if (2 * n * k > kMaxDensityQubits) throw std::length_error("outcome table exceeds the 12-qubit cap");
  OutcomeTable t;
  t.n = n;
  t.basis_bits = groups_of(n, group) * k;
  t.outcome_bits = 2 * n * k;
  for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << n); ++xv) {
    t.p.emplace_back();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << t.basis_bits); ++s)
      t.p.back().push_back(pair_conditional(bits_of(xv, n), k, group, s));
  }
  return t;
}

namespace {

// Outcome distribution of one locking block: qubits 0..n-1 hold the split
// values, qubit n holds t, all in basis s. Consecutive qubits are paired
// (control first) with the last odd one paired to qubit n; the measured
// qubits are 0..m-1.
RealVector block_outcomes(const std::vector<Bit>& values, Bit t, Bit s) {
  const int n = static_cast<int>(values.size());
  const int m = n % 2 ? n + 1 : n;
  Vector psi = encode_single(values[0], s);
  for (int i = 1; i <= n; ++i) {
    const Vector q = encode_single(i < n ? values[i] : t, s);
    Vector w(psi.size() * 2);
    w.head(psi.size()) = q(0) * psi;
    w.tail(psi.size()) = q(1) * psi;
    psi = std::move(w);
  }
  const Matrix cnot = gates::CNOT().matrix(), h = gates::H().matrix();
  for (int c = 0; c + 1 < m; c += 2) {
    apply_matrix(psi, n + 1, cnot, {c, c + 1});
    apply_matrix(psi, n + 1, h, {c});
  }
  RealVector out = RealVector::Zero(Eigen::Index{1} << m);
  const Eigen::Index mask = (Eigen::Index{1} << m) - 1;
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) out(idx & mask) += std::norm(psi(idx));
  return out;
}

}  // namespace

OutcomeTable locking_outcome_table(int n, int k) {
  check_params(n, k);
  if (k * (n + 1) > kMaxDensityQubits) throw std::length_error("outcome table exceeds the 12-qubit cap");
  const int m = n % 2 ? n + 1 : n;
  OutcomeTable tab;
  tab.n = n;
  tab.basis_bits = k;
  tab.outcome_bits = k * m;
  std::map<std::tuple<std::uint64_t, Bit, Bit>, RealVector> cache;
  auto block = [&](const std::vector<Bit>& v, Bit t, Bit s) -> const RealVector& {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i) key |= std::uint64_t{v[i]} << i;
    auto [it, fresh] = cache.try_emplace({key, t, s});
    if (fresh) it->second = block_outcomes(v, t, s);
    return it->second;
  };
  const std::uint64_t splits = std::uint64_t{1} << (n * (k - 1));
  const double w = 1.0 / (static_cast<double>(splits) * std::ldexp(1.0, k));
  for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << n); ++xv) {
    const auto x = bits_of(xv, n);
    tab.p.emplace_back();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
      RealVector acc = RealVector::Zero(Eigen::Index{1} << tab.outcome_bits);
      for (std::uint64_t f = 0; f < splits; ++f) {
        const auto split = split_values(x, k, f);
        for (std::uint64_t tv = 0; tv < (std::uint64_t{1} << k); ++tv) {
          // Blocks are independent given the split, s and t.
          RealVector joint = RealVector::Ones(1);
          for (int j = 0; j < k; ++j) {
            std::vector<Bit> v(n);
            for (int i = 0; i < n; ++i) v[i] = split[i][j];
            const RealVector& b = block(v, (tv >> j) & 1, (s >> j) & 1);
            RealVector next(joint.size() * b.size());
            for (Eigen::Index hi = 0; hi < b.size(); ++hi) next.segment(hi * joint.size(), joint.size()) = b(hi) * joint;
            joint = std::move(next);
          }
          acc += w * joint;
        }
      }
      tab.p.back().push_back(std::move(acc));
    }
  }
  return tab;
}

OutcomeTable classical_outcome_table(int n, int k) {
  // Slot j of variable i carries x_ij in the position chosen by s_j, the same
  // law as the shared-basis pair frame.
  return pair_outcome_table(n, k, n);
}

OutcomeTable outcome_table(ViewScheme scheme, int n, int k) {
  switch (scheme) {
    case ViewScheme::Scheme4: return pair_outcome_table(n, k, 1);
    case ViewScheme::Scheme7: return pair_outcome_table(n, k, n);
    case ViewScheme::Scheme8: return locking_outcome_table(n, k);
    case ViewScheme::Scheme10: return classical_outcome_table(n, k);
  }
  throw std::invalid_argument("unknown scheme");
}

namespace {

RealMatrix joint_for(const OutcomeTable& t, const std::function<bool(std::uint64_t)>& use_s,
                     const std::function<int(std::uint64_t)>& row, int rows) {
  const Eigen::Index outcomes = Eigen::Index{1} << t.outcome_bits;
  RealMatrix joint = RealMatrix::Zero(rows, outcomes);
  double total = 0.0;
  for (std::size_t x = 0; x < t.p.size(); ++x)
    for (std::size_t s = 0; s < t.p[x].size(); ++s)
      if (use_s(s)) {
        joint.row(row(x)) += t.p[x][s].transpose();
        total += 1.0;
      }
  return joint / total;
}

}  // namespace

double table_information(const OutcomeTable& t) {
  return mutual_information(joint_for(
      t, [](std::uint64_t) { return true; }, [](std::uint64_t x) { return static_cast<int>(x); },
      static_cast<int>(t.p.size())));
}

double table_information_given_bases(const OutcomeTable& t) {
  double acc = 0.0;
  const std::uint64_t bases = std::uint64_t{1} << t.basis_bits;
  for (std::uint64_t s = 0; s < bases; ++s)
    acc += mutual_information(joint_for(
        t, [s](std::uint64_t v) { return v == s; }, [](std::uint64_t x) { return static_cast<int>(x); },
        static_cast<int>(t.p.size())));
  return acc / static_cast<double>(bases);
}

double table_bit_information(const OutcomeTable& t, int i) {
  if (i < 0 || i >= t.n) throw std::out_of_range("bit index out of range");
  return mutual_information(joint_for(
      t, [](std::uint64_t) { return true; }, [i](std::uint64_t x) { return static_cast<int>((x >> i) & 1); }, 2));
}

double cmi_uniform(ViewScheme scheme, int n, int k) {
  if (scheme != ViewScheme::Scheme7 && scheme != ViewScheme::Scheme8)
    throw std::invalid_argument("uniform-input information is defined for schemes 7 and 8");
  return table_information(outcome_table(scheme, n, k));
}

double cmi_formula(const std::string& kind, int n, int k) {
  check_params(n, k);
  const double q = std::ldexp(1.0, -k);
  if (kind == "k1_exact") return n - 1 + std::ldexp(1.0, -n);
  if (kind == "n2_exact") return 3 * q - q * q;
  if (kind == "two_bit_lower") return n - (std::ldexp(1.0, k) - 1) * (1 - std::pow(1 - q, n));
  throw std::invalid_argument("unknown formula " + kind);
}

double view_holevo(ViewScheme scheme, int n, int k) {
  Ensemble e;
  const double w = std::ldexp(1.0, -n);
  for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << n); ++xv)
    e.push_back({w, view_density(bob_view(scheme, n, k, bits_of(xv, n)))});
  return holevo(e);
}

}  // namespace qhelab
