// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ssrent {

using Complex = std::complex<double>;

/// Small dense square complex matrix, row-major. Dimensions in this library
/// never exceed a few hundred, so no blocking or sparsity is attempted.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static CMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  Complex trace() const;
  double max_abs() const;
  /// max over (i,j) of |a_ij - conj(a_ji)|; zero for exactly Hermitian input.
  double hermiticity_defect() const;
  /// sqrt of the sum of |a_ij|^2 over the strict upper triangle.
  double offdiagonal_norm() const;

  CMatrix& operator*=(double s);
  CMatrix& operator+=(const CMatrix& other);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> a_;
};

/// max over entries of |a_ij - b_ij|; matrices must have equal size.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace ssrent
