// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelab/rebit/encoding.hpp"
#include "qhelab/rebit/gadget.hpp"
#include "qhelab/rebit/ydiag.hpp"
