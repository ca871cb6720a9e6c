// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace qhelab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Bit = std::uint8_t;

enum class Party { Alice, Bob };

inline const char* party_name(Party p) { return p == Party::Alice ? "alice" : "bob"; }
inline Party other(Party p) { return p == Party::Alice ? Party::Bob : Party::Alice; }

enum class Basis { Z, X };

// Density path is capped at 12 qubits, statevectors at 24.
inline constexpr int kMaxDensityQubits = 12;
inline constexpr int kMaxStateQubits = 24;

inline constexpr double kNormTol = 1e-10;
inline constexpr double kPsdTol = -1e-9;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace qhelab
