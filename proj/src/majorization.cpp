// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#include "ssrent/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace ssrent {

ProbabilityVector ProbabilityVector::make(std::vector<double> values,
                                          double norm_tol) {
  double total = 0.0;
  for (double& v : values) {
    if (v < -tol::kPsd)
      throw std::invalid_argument("ProbabilityVector: negative entry " +
                                  std::to_string(v));
    if (v < 0.0) v = 0.0;
    total += v;
  }
  if (std::abs(total - 1.0) > norm_tol)
    throw std::invalid_argument("ProbabilityVector: entries sum to " +
                                std::to_string(total));
  ProbabilityVector p;
  p.values_ = std::move(values);
  p.total_ = total;
  return p;
}

std::vector<double> partial_sums_desc(const ProbabilityVector& x) {
  std::vector<double> sums = x.values();
  std::sort(sums.begin(), sums.end(), std::greater<>());
  double acc = 0.0;
  for (double& v : sums) {
    acc += v;
    v = acc;
  }
  return sums;
}

bool majorizes(const ProbabilityVector& y, const ProbabilityVector& x,
               double tolerance) {
  if (std::abs(y.total() - x.total()) > tolerance)
    throw std::invalid_argument("majorizes: totals differ beyond tolerance");

  std::vector<double> py = partial_sums_desc(y);
  std::vector<double> px = partial_sums_desc(x);
  // Zero-padding leaves trailing partial sums constant at the total.
  const std::size_t n = std::max(px.size(), py.size());
  px.resize(n, x.total());
  py.resize(n, y.total());
  for (std::size_t k = 0; k < n; ++k)
    if (py[k] < px[k] - tolerance) return false;
  return true;
}

}  // namespace ssrent
