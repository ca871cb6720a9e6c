// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelab/qsim/gates.hpp"
#include "qhelab/qsim/info.hpp"
#include "qhelab/qsim/ops.hpp"
#include "qhelab/qsim/rng.hpp"
#include "qhelab/qsim/state.hpp"
#include "qhelab/qsim/types.hpp"
