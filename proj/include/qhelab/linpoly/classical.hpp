// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelab/linpoly/polynomial.hpp"
#include "qhelab/qsim/rng.hpp"

namespace qhelab {

// Classical analogue: per (i, j) Alice sends a bit pair holding x_ij in the
// first slot (s_j = 0) or the second (s_j = 1) and a random filler bit.
LinpolyRun run_scheme10(const std::vector<Bit>& x, const LinearPolynomial& p, int k, Rng& rng,
                        bool distributed = false);

}  // namespace qhelab
