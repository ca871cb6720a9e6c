// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "qhelab/qsim/types.hpp"

namespace qhelab {

double binary_entropy(double p);
double shannon_entropy(const RealVector& p);
double von_neumann_entropy(const Matrix& rho);

// joint(x, y) is P(input = x, outcome = y). Throws if not normalized.
double mutual_information(const RealMatrix& joint);

using Ensemble = std::vector<std::pair<double, Matrix>>;
double holevo(const Ensemble& ensemble);

}  // namespace qhelab
