// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "qhelab/harness/report.hpp"
#include "qhelab/qsim.hpp"
#include "qhelab/seclab.hpp"

namespace qhelab {
namespace {

constexpr double kExact = 1e-9;

std::vector<Bit> bits_of(unsigned v, int n) {
  std::vector<Bit> b(n);
  for (int i = 0; i < n; ++i) b[i] = (v >> i) & 1;
  return b;
}

Matrix ket_density(double a, double b) {
  Vector v(2);
  v << a, b;
  return v * v.adjoint();
}

// One pair after the withheld bits are averaged: the first qubit is
// Z-dephased, the second X-dephased. Second qubit is the high factor.
Matrix dephased_pair(Bit x, Bit s) {
  const double h = 1.0 / std::sqrt(2.0);
  const Matrix mixed = Matrix::Identity(2, 2) / 2.0;
  if (!s) return Eigen::kroneckerProduct(mixed, x ? ket_density(0, 1) : ket_density(1, 0)).eval();
  return Eigen::kroneckerProduct(x ? ket_density(h, -h) : ket_density(h, h), mixed).eval();
}

void expect_density(const Matrix& rho) {
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
  EXPECT_LT((rho - rho.adjoint()).norm(), 1e-12);
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
}

TEST(SeclabViews, SinglePairMatchesHandOracle) {
  const Matrix v0 = 0.5 * (dephased_pair(0, 0) + dephased_pair(0, 1));
  const Matrix v1 = 0.5 * (dephased_pair(1, 0) + dephased_pair(1, 1));
  EXPECT_NEAR(trace_distance(v0, v1), 0.5, kExact);
  for (Bit x = 0; x < 2; ++x) {
    const BobView v = bob_view(ViewScheme::Scheme4, 1, 1, std::vector<Bit>{x});
    EXPECT_EQ(v.qubits, 2);
    const Matrix rho = view_density(v);
    expect_density(rho);
    EXPECT_LT((rho - (x ? v1 : v0)).norm(), 1e-12);
  }
  EXPECT_NEAR(privacy_distance(ViewScheme::Scheme4, 1, 1, {0}, {1}), 0.5, kExact);
}

TEST(SeclabViews, DiagonalFrameMatchesEncoderEnumeration) {
  struct Case {
    int n, k, group;
  };
  for (const Case c : {Case{1, 1, 1}, Case{1, 2, 1}, Case{2, 1, 1}, Case{2, 1, 2}}) {
    for (unsigned xv = 0; xv < (1u << c.n); ++xv) {
      const auto x = bits_of(xv, c.n);
      const Matrix dense = pair_view_dense(x, c.k, c.group);
      const Matrix frame = pair_frame_density(pair_view_distribution(x, c.k, c.group), c.n * c.k);
      expect_density(dense);
      EXPECT_LT((dense - frame).cwiseAbs().maxCoeff(), 1e-12) << c.n << " " << c.k << " " << c.group;
    }
  }
}

TEST(SeclabViews, PerVariableDistanceHalvesPerPair) {
  for (int k = 1; k <= 3; ++k)
    EXPECT_NEAR(privacy_distance(ViewScheme::Scheme4, 1, k, {0}, {1}), std::ldexp(1.0, -k), kExact) << k;
  // Dense cross-check on the encoder enumeration.
  for (int k = 1; k <= 3; ++k)
    EXPECT_NEAR(trace_distance(pair_view_dense({0}, k, 1), pair_view_dense({1}, k, 1)), std::ldexp(1.0, -k), kExact);
}

TEST(SeclabViews, LockingPerBitDistance) {
  EXPECT_NEAR(per_bit_distance(ViewScheme::Scheme8, 1, 1, 0), 1.0 / std::sqrt(2.0), kExact);
  EXPECT_NEAR(per_bit_distance(ViewScheme::Scheme8, 1, 2, 0), 0.5, kExact);
  // Other bits uniform: the same value per bit.
  EXPECT_NEAR(per_bit_distance(ViewScheme::Scheme8, 2, 1, 1), 1.0 / std::sqrt(2.0), kExact);
  const BobView v = bob_view(ViewScheme::Scheme8, 2, 1, std::vector<Bit>{0, 1});
  EXPECT_EQ(v.qubits, 3);
  expect_density(v.density);
  // Hand oracle: with the t qubit traced out the views are
  // (|x1 x2><x1 x2| in Z + the same in X) / 2. A known x1 = 0 leaks the basis,
  // so the distance exceeds the per-bit value.
  const double h = 1.0 / std::sqrt(2.0);
  const Matrix z0 = ket_density(1, 0), z1 = ket_density(0, 1), xp = ket_density(h, h), xm = ket_density(h, -h);
  const Matrix r00 = 0.5 * (Eigen::kroneckerProduct(z0, z0).eval() + Eigen::kroneckerProduct(xp, xp).eval());
  const Matrix r01 = 0.5 * (Eigen::kroneckerProduct(z1, z0).eval() + Eigen::kroneckerProduct(xm, xp).eval());
  const double oracle = trace_distance(r00, r01);
  EXPECT_NEAR(oracle, std::sqrt(3.0) / 2.0, kExact);
  const double d = privacy_distance(ViewScheme::Scheme8, 2, 1, {0, 0}, {0, 1});
  EXPECT_NEAR(d, oracle, kExact);
  EXPECT_GT(d, 1.0 / std::sqrt(2.0));
}

TEST(SeclabViews, SharedBasisDistancesAreConstant) {
  for (int n : {2, 3})
    for (int k : {1, 2}) {
      std::vector<BobView> views;
      for (unsigned xv = 0; xv < (1u << n); ++xv) views.push_back(bob_view(ViewScheme::Scheme7, n, k, bits_of(xv, n)));
      const double c0 = classical_trace_distance(views[0].distribution, views[1].distribution);
      EXPECT_GT(c0, 0.0);
      for (std::size_t a = 0; a < views.size(); ++a) {
        EXPECT_NEAR(classical_trace_distance(views[a].distribution, views[a].distribution), 0.0, kExact);
        for (std::size_t b = a + 1; b < views.size(); ++b)
          EXPECT_NEAR(classical_trace_distance(views[a].distribution, views[b].distribution), c0, kExact)
              << n << k << " " << a << " " << b;
      }
    }
  EXPECT_NEAR(privacy_distance(ViewScheme::Scheme7, 2, 1, {1, 0}, {1, 0}), 0.0, kExact);
}

TEST(SeclabViews, ClassicalViewMatchesSharedBasisFrame) {
  for (int n : {1, 2})
    for (int k : {1, 2})
      for (unsigned xv = 0; xv < (1u << n); ++xv) {
        const auto x = bits_of(xv, n);
        EXPECT_LT((classical_view(x, k) - pair_view_distribution(x, k, n)).cwiseAbs().maxCoeff(), 1e-12);
      }
}

TEST(SeclabViews, IndependenceStructure) {
  for (unsigned xv = 0; xv < 4; ++xv) {
    const auto x = bits_of(xv, 2);
    EXPECT_LT(factorization_gap(x, 1, 1), 1e-12);
    EXPECT_LT(factorization_gap(x, 2, 1), 1e-12);
    EXPECT_GT(factorization_gap(x, 1, 2), 1e-6);
  }
}

TEST(SeclabViews, CapsAndValidation) {
  EXPECT_THROW(bob_view(ViewScheme::Scheme7, 4, 2, std::nullopt), std::length_error);
  EXPECT_THROW(bob_view(ViewScheme::Scheme4, 0, 1, std::nullopt), std::invalid_argument);
  EXPECT_THROW(bob_view(ViewScheme::Scheme4, 2, 1, std::vector<Bit>{0}), std::invalid_argument);
  EXPECT_THROW(view_scheme_from_id(5), std::invalid_argument);
  const BobView u = bob_view(ViewScheme::Scheme7, 2, 1, std::nullopt);
  EXPECT_NEAR(u.distribution.sum(), 1.0, 1e-12);
}

TEST(SeclabInfo, UniformInputConstants) {
  EXPECT_NEAR(cmi_uniform(ViewScheme::Scheme7, 2, 1), 1.25, kExact);
  EXPECT_NEAR(cmi_uniform(ViewScheme::Scheme7, 2, 2), 0.6875, kExact);
  EXPECT_NEAR(cmi_uniform(ViewScheme::Scheme7, 3, 1), 2.125, kExact);
  for (int k = 1; k <= 3; ++k)
    EXPECT_NEAR(cmi_uniform(ViewScheme::Scheme7, 2, k), cmi_formula("n2_exact", 2, k), kExact) << k;
  EXPECT_THROW(cmi_uniform(ViewScheme::Scheme4, 2, 1), std::invalid_argument);
}

TEST(SeclabInfo, Formulas) {
  EXPECT_DOUBLE_EQ(cmi_formula("k1_exact", 2, 1), 1.25);
  EXPECT_DOUBLE_EQ(cmi_formula("n2_exact", 2, 2), 11.0 / 16.0);
  for (int n = 1; n <= 6; ++n) EXPECT_NEAR(cmi_formula("two_bit_lower", n, 1), cmi_formula("k1_exact", n, 1), 1e-12);
  EXPECT_THROW(cmi_formula("other", 2, 1), std::invalid_argument);
}

TEST(SeclabInfo, PerBitInformation) {
  for (int n : {1, 2})
    for (int k = 1; k <= 3; ++k) {
      const OutcomeTable t = pair_outcome_table(n, k, n);
      for (int i = 0; i < n; ++i) EXPECT_NEAR(table_bit_information(t, i), std::ldexp(1.0, -k), kExact) << n << k;
    }
}

TEST(SeclabInfo, KnownBasesRevealInput) {
  for (int n : {2, 3}) {
    const OutcomeTable t = pair_outcome_table(n, 1, n);
    EXPECT_NEAR(table_information_given_bases(t), n, kExact);
    EXPECT_GE(table_information(t), n - 1 - kExact);
  }
  for (int n : {2, 3, 4}) {
    const OutcomeTable t = locking_outcome_table(n, 1);
    EXPECT_GE(table_information_given_bases(t), n / 2 - kExact) << n;
    EXPECT_GE(table_information(t), n / 2 - 1 - kExact) << n;
  }
}

TEST(SeclabInfo, HolevoEqualsEnumeratedInformation) {
  EXPECT_NEAR(view_holevo(ViewScheme::Scheme7, 2, 1), cmi_uniform(ViewScheme::Scheme7, 2, 1), kExact);
  EXPECT_NEAR(view_holevo(ViewScheme::Scheme7, 1, 2), cmi_uniform(ViewScheme::Scheme7, 1, 2), kExact);
  EXPECT_NEAR(view_holevo(ViewScheme::Scheme4, 2, 1), table_information(pair_outcome_table(2, 1, 1)), kExact);
}

TEST(SeclabAdversary, CheatingBob) {
  Rng rng(17);
  const BobAttack k1 = cheating_bob(4, 1, 1, 10000, rng);
  EXPECT_NEAR(k1.guess_rate, 0.75, kExact);
  EXPECT_GT(k1.errors.rate(), 0.1);
  EXPECT_NEAR(cheating_bob(4, 1, 2, 0, rng).guess_rate, 0.625, kExact);
}

TEST(SeclabAdversary, CheatingAlice) {
  Rng rng(19);
  const AliceAttack probe = cheating_alice(4, "probe", 1, 1, 10000, rng);
  EXPECT_EQ(probe.identified.successes, probe.identified.trials);
  EXPECT_GE(probe.errors.rate(), 0.2);
  const AliceAttack honest = cheating_alice(4, "honest", 1, 1, 10000, rng);
  const auto [lo, hi] = wilson_interval(honest.identified.successes, honest.identified.trials);
  EXPECT_LE(lo, 0.5);
  EXPECT_GE(hi, 0.5);
  EXPECT_EQ(honest.errors.successes, 0u);
  EXPECT_THROW(cheating_alice(4, "unknown", 1, 1, 1, rng), std::invalid_argument);
}

TEST(SeclabAdversary, Registry) {
  int alice = 0, bob = 0;
  for (const AdversaryStrategy& s : adversary_strategies()) (s.party == Party::Alice ? alice : bob)++;
  EXPECT_GE(alice, 3);
  EXPECT_GE(bob, 2);
}

}  // namespace
}  // namespace qhelab
