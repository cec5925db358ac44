// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ssrent/tolerances.hpp"

namespace ssrent {

/// Nonnegative reals summing to one (within tolerance). Entries in
/// [-tol::kPsd, 0) are clamped to zero at construction; anything more
/// negative, or a total off by more than norm_tol, is rejected.
class ProbabilityVector {
 public:
  ProbabilityVector() = default;
  static ProbabilityVector make(std::vector<double> values,
                                double norm_tol = tol::kMajorization);

  const std::vector<double>& values() const noexcept { return values_; }
  double total() const noexcept { return total_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
  double total_ = 0.0;
};

/// Cumulative sums of the descending rearrangement; monotone nondecreasing,
/// ending at the total.
std::vector<double> partial_sums_desc(const ProbabilityVector& x);

/// True iff x is majorized by y (x ≺ y): every leading partial sum of y's
/// descending rearrangement dominates x's within `tolerance` per sum. The
/// shorter vector is zero-padded; totals must agree within `tolerance`.
/// Ties count as majorization in both directions.
bool majorizes(const ProbabilityVector& y, const ProbabilityVector& x,
               double tolerance = tol::kMajorization);

}  // namespace ssrent
