// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "qhelab/qsim.hpp"
#include "qhelab/rebit.hpp"

namespace qhelab {
namespace {

const double kR = 1.0 / std::sqrt(2.0);
const Complex kI(0, 1);

// Equal up to a global phase: |<a|b>|^2 = |a|^2 |b|^2.
bool proportional(const Matrix& a, const Matrix& b, double tol = 1e-9) {
  Eigen::Map<const Vector> va(a.data(), a.size()), vb(b.data(), b.size());
  const double na = va.squaredNorm(), nb = vb.squaredNorm();
  if (na < tol || nb < tol) return false;
  return std::abs(std::norm(va.dot(vb)) / (na * nb) - 1.0) < tol;
}

TEST(Rebit, EncodeExamples) {
  Vector zero = Vector::Zero(2);
  zero(0) = 1.0;
  Vector e = rebit_encode(zero);
  ASSERT_EQ(e.size(), 4);
  EXPECT_NEAR(std::abs(e(0) - Complex(1.0)), 0.0, 1e-12);

  Vector psi(2);
  psi << kR, kR * kI;
  Vector expect = Vector::Zero(4);
  expect(0b00) = kR;  // |0>|R>
  expect(0b11) = kR;  // |1>|I>
  EXPECT_NEAR((rebit_encode(psi) - expect).norm(), 0.0, 1e-12);
}

TEST(Rebit, RoundTripAndIsometry) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    Vector psi = random_state(2, rng).vector();
    Vector phi = random_state(2, rng).vector();
    EXPECT_NEAR((rebit_decode(rebit_encode(psi)) - psi).norm(), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(rebit_encode(phi).dot(rebit_encode(psi)) - Complex(phi.dot(psi).real())), 0.0, 1e-12);
  }
  Vector bad = Vector::Zero(4);
  bad(0) = kI;
  EXPECT_THROW(rebit_decode(bad), std::domain_error);
}

TEST(Rebit, LogicalRzOnPlus) {
  Vector plus(2);
  plus << kR, kR;
  QuantumState s = QuantumState::from_vector(rebit_encode(plus));
  apply_physical(s, translate_logical_gate({"rz", kPi / 2, {0}}, 1));
  Vector oracle = gates::Rz(kPi / 2).matrix() * plus;
  EXPECT_NEAR((s.vector() - rebit_encode(oracle)).norm(), 0.0, 1e-12);
  EXPECT_TRUE(is_real(s.vector()));
}

TEST(Rebit, LogicalRzOnRandomStates) {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const double theta = 2 * kPi * rng.uniform();
    Vector psi = random_state(2, rng).vector();
    QuantumState s = QuantumState::from_vector(rebit_encode(psi));
    apply_physical(s, translate_logical_gate({"rz", theta, {1}}, 2));
    Vector oracle = tensor_ops({Matrix::Identity(2, 2), gates::Rz(theta).matrix()}) * psi;
    EXPECT_NEAR((rebit_decode(s.vector()) - oracle).norm(), 0.0, 1e-12);
  }
}

TEST(Rebit, LogicalRyCommutesWithEncoding) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const double theta = 2 * kPi * rng.uniform();
    Vector psi = random_state(1, rng).vector();
    QuantumState s = QuantumState::from_vector(rebit_encode(psi));
    auto seq = translate_logical_gate({"ry", theta, {0}}, 1);
    for (const auto& pg : seq) EXPECT_TRUE(is_real(pg.gate.matrix()));
    apply_physical(s, seq);
    EXPECT_NEAR((s.vector() - rebit_encode(gates::Ry(theta).matrix() * psi)).norm(), 0.0, 1e-12);
  }
}

TEST(Rebit, TranslationEdgeCases) {
  EXPECT_TRUE(translate_logical_gate({"id", 0, {0}}, 1).empty());
  EXPECT_THROW(translate_logical_gate({"h", 0, {0}}, 1), UnsupportedGate);
  auto f = translate_logical_gate({"f", 0, {0, 1}}, 2);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_TRUE(is_real(f[0].gate.matrix()));
}

TEST(YDiag, BasicExpansions) {
  YDiagExpansion id = ydiag_expand(Matrix::Identity(2, 2));
  EXPECT_NEAR(std::abs(id(0) - Complex(1.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(id(1)), 0.0, 1e-12);
  YDiagExpansion sy = ydiag_expand(gates::pauli(2));
  EXPECT_NEAR(std::abs(sy(0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(sy(1) - Complex(1.0)), 0.0, 1e-12);
  EXPECT_THROW(ydiag_expand(gates::pauli(1)), std::invalid_argument);
}

TEST(YDiag, ThreeQubitFamily) {
  for (double theta : {0.0, 0.3, 1.2, -2.5}) {
    Matrix u = ydiag_triple(theta);
    EXPECT_TRUE(is_real(u));
    YDiagExpansion e = ydiag_expand(u);
    for (GroupElement f = 0; f < 8; ++f) {
      Complex expect = f == 0 ? Complex(std::cos(theta)) : f == 7 ? kI * std::sin(theta) : Complex(0.0);
      EXPECT_NEAR(std::abs(e(f) - expect), 0.0, 1e-12) << f;
    }
  }
}

TEST(YDiag, CMatrixExamples) {
  YDiagExpansion e{1, {1.0, 0.0}};
  EXPECT_NEAR((build_c_matrix(e) - Matrix::Identity(2, 2)).norm(), 0.0, 1e-12);
  e.c = {0.0, 1.0};
  EXPECT_NEAR((build_c_matrix(e) - gates::pauli(1)).norm(), 0.0, 1e-12);
  for (double a : {0.1, 0.9, 2.0, -1.3}) {
    e.c = {std::cos(a), -kI * std::sin(a)};
    Matrix expect = std::cos(a) * Matrix::Identity(2, 2) - kI * std::sin(a) * gates::pauli(1);
    EXPECT_NEAR((build_c_matrix(e) - expect).norm(), 0.0, 1e-12);
  }
  e.c = {1.0, 1.0};
  EXPECT_THROW(build_c_matrix(e), std::domain_error);
}

TEST(YDiag, RandomInstancesReconstructAndGiveUnitaryCirculantC) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const int K = 1 + trial % 3;
    const Eigen::Index d = Eigen::Index{1} << K;
    Vector phases(d);
    for (Eigen::Index i = 0; i < d; ++i) phases(i) = std::polar(1.0, 2 * kPi * rng.uniform());
    Matrix u = y_basis(K) * phases.asDiagonal() * y_basis(K).adjoint();
    YDiagExpansion e = ydiag_expand(u);
    EXPECT_NEAR((reconstruct(e) - u).norm(), 0.0, 1e-9);
    double weight = 0.0;
    for (Complex c : e.c) weight += std::norm(c);
    EXPECT_NEAR(weight, 1.0, 1e-9);
    Matrix c = build_c_matrix(e);
    for (Eigen::Index g = 0; g < d; ++g)
      for (Eigen::Index f = 0; f < d; ++f) EXPECT_EQ(c(g, f), c(g ^ f, 0));
  }
}

TEST(YDiag, RandomRealGeneratorIsRealAndYDiagonal) {
  Rng rng(5);
  for (int K = 1; K <= 3; ++K)
    for (int i = 0; i < 10; ++i) {
      Matrix u = random_real_ydiag(K, rng);
      EXPECT_TRUE(is_unitary(u, 1e-10));
      EXPECT_TRUE(is_real(u));
      EXPECT_TRUE(is_y_diagonal(u));
    }
}

TEST(YDiag, RemoteUnitaryInterpolatesBetweenCAndU) {
  Rng rng(6);
  Matrix u = random_real_ydiag(3, rng);
  YDiagExpansion e = ydiag_expand(u);
  EXPECT_NEAR((build_remote_unitary(e, 0b111) - build_c_matrix(e)).norm(), 0.0, 1e-12);
  EXPECT_NEAR((build_remote_unitary(e, 0) - u).norm(), 0.0, 1e-12);
  EXPECT_TRUE(is_unitary(build_remote_unitary(e, 0b001), 1e-9));
}

// Operator the gadget induces on the data qubit in branch (m, s), computed
// by pushing both basis states through the circuit with forced projections.
Matrix branch_operator(const GadgetTarget& g, Bit m, Bit s) {
  Matrix op(2, 2);
  for (int col = 0; col < 2; ++col) {
    QuantumState data = QuantumState::basis(1, col);
    QuantumState t = tensor(data, QuantumState::from_vector(epr_pair()));
    apply_gate_inplace(t, gates::CiY(), {1, 0});
    apply_gate_inplace(t, gates::Ry(kPi / 2), {1});
    Vector v = t.vector();
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (((i >> 1) & 1) != m) v(i) = 0.0;
    QuantumState u = QuantumState::from_vector(v / v.norm());
    apply_gate_inplace(u, gates::Ry(gadget_bob_rotation(g, m) * kPi / 4), {2});
    Vector w = u.vector() * v.norm();
    for (Eigen::Index i = 0; i < 8; ++i) {
      if (((i >> 2) & 1) != s) w(i) = 0.0;
    }
    const Eigen::Index base = (Eigen::Index{m} << 1) | (Eigen::Index{s} << 2);
    op(0, col) = w(base);
    op(1, col) = w(base | 1);
  }
  return op;
}

TEST(Gadget, FrozenTableMatchesBranchEnumeration) {
  std::vector<GadgetTarget> targets = {GadgetTarget::quarter(0), GadgetTarget::quarter(1), GadgetTarget::quarter(2),
                                       GadgetTarget::quarter(3), GadgetTarget::ty()};
  const Matrix ypi = gates::Ry(kPi).matrix();
  for (const GadgetTarget& g : targets)
    for (Bit m = 0; m < 2; ++m)
      for (Bit s = 0; s < 2; ++s) {
        Matrix op = branch_operator(g, m, s);
        const bool plain = proportional(op, g.matrix());
        const bool flipped = proportional(op, ypi * g.matrix());
        ASSERT_TRUE(plain != flipped) << "branch operator not in {G, R_y(pi) G}";
        EXPECT_EQ(gadget_correction(g, m, s), flipped ? 1 : 0);
      }
}

TEST(Gadget, CorrectedOutputMatchesTarget) {
  Rng rng(7);
  std::vector<GadgetTarget> targets = {GadgetTarget::quarter(0), GadgetTarget::quarter(1), GadgetTarget::quarter(2),
                                       GadgetTarget::quarter(3), GadgetTarget::ty()};
  for (const GadgetTarget& g : targets)
    for (int i = 0; i < 100; ++i) {
      QuantumState psi = random_real_state(2, rng);
      QuantumState s = psi;
      GadgetOutcome out = uncertain_gadget(s, 1, g, rng);
      if (out.r) apply_gate_inplace(s, gates::Ry(-kPi), {1});
      Vector oracle = tensor_ops({Matrix::Identity(2, 2), g.matrix()}) * psi.vector();
      ASSERT_NEAR(fidelity(s.vector(), oracle), 1.0, 1e-9);
    }
}

TEST(Gadget, TyChoiceDependsOnAliceOutcome) {
  EXPECT_EQ(gadget_bob_rotation(GadgetTarget::ty(), 1), 1);
  EXPECT_EQ(gadget_bob_rotation(GadgetTarget::ty(), 0), 3);
  EXPECT_THROW(GadgetTarget::quarter(4), std::invalid_argument);
}

TEST(Gadget, UncertainRzOnRebitState) {
  Rng rng(8);
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 25; ++i) {
      Vector psi = random_state(1, rng).vector();
      QuantumState s = QuantumState::from_vector(rebit_encode(psi));
      RzGadgetOutcome out = uncertain_rz_gadget(s, 0, 1, k, rng);
      EXPECT_TRUE(is_real(out.residual));
      if (out.inner.r) apply_matrix(s.vector(), 2, out.residual.adjoint(), {0, 1});
      Vector decoded = rebit_decode(strip_global_phase(s.vector()));
      ASSERT_NEAR(fidelity(decoded, Vector(gates::Rz(k * kPi / 2).matrix() * psi)), 1.0, 1e-9) << k;
    }
}

}  // namespace
}  // namespace qhelab
