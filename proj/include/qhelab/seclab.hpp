// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelab/seclab/adversary.hpp"
#include "qhelab/seclab/info.hpp"
#include "qhelab/seclab/views.hpp"
