// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelab/qhe/garden_hose.hpp"
#include "qhelab/qhe/keys.hpp"
#include "qhelab/qhe/scheme5.hpp"
#include "qhelab/qhe/scheme6.hpp"
