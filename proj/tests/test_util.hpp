// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

/// Seed shared by all randomized tests; overridable with `--seed N`.
std::uint64_t test_seed();
