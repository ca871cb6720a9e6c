// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "qhelab/qsim/types.hpp"

namespace qhelab::seclab_detail {

std::vector<Bit> bits_of(std::uint64_t v, int n);
// Split of each x_i into k bits: the first k-1 come from `free`, i-major.
std::vector<std::vector<Bit>> split_values(const std::vector<Bit>& x, int k, std::uint64_t free);
void check_params(int n, int k);
int groups_of(int n, int group);
// Pair-frame distribution for fixed basis bits s (bit j * groups + g).
RealVector pair_conditional(const std::vector<Bit>& x, int k, int group, std::uint64_t s);

}  // namespace qhelab::seclab_detail
