// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelab/harness/bits.hpp"
#include "qhelab/harness/protocol.hpp"
#include "qhelab/harness/report.hpp"
#include "qhelab/harness/teleport.hpp"
#include "qhelab/harness/transcript.hpp"
