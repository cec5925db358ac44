// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace ssrent::tol {

// All paper-scale quantities are exact decimals; double precision leaves
// orders of magnitude of headroom below these bounds.
inline constexpr double kHermitian = 1e-10;  ///< max |a_ij - conj(a_ji)| accepted
inline constexpr double kTrace = 1e-10;      ///< |tr - expected| accepted
inline constexpr double kPsd = 1e-10;        ///< eigenvalues >= -kPsd accepted
inline constexpr double kEigenResidual = 1e-10;  ///< max |Av - lambda v| accepted

// Decision thresholds. kMajorization is the per-partial-sum slack and is the
// one knob the CLI lets the environment override (SSR_ENT_TOLERANCE).
inline constexpr double kMajorization = 1e-9;
inline constexpr double kDecide = 1e-9;       ///< chi and sector-weight equality
inline constexpr double kSectorPurity = 1e-9; ///< sector projection is "pure" iff tr(p^2) >= 1 - this
inline constexpr double kZeroWeight = 1e-9;   ///< sectors at or below this weight are skipped in step 3
inline constexpr double kNullProjection = 1e-12;  ///< below this a sector carries no normalized projection

}  // namespace ssrent::tol
