// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>
