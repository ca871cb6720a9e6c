// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelab/linpoly/classical.hpp"
#include "qhelab/linpoly/locking.hpp"
#include "qhelab/linpoly/pair_schemes.hpp"
#include "qhelab/linpoly/polynomial.hpp"
#include "qhelab/linpoly/strategies.hpp"
