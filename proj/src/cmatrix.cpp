// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#include "ssrent/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssrent {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double CMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

double CMatrix::offdiagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) s += std::norm((*this)(i, j));
  return std::sqrt(s);
}

CMatrix& CMatrix::operator*=(double s) {
  for (Complex& v : a_) v *= s;
  return *this;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("CMatrix: size mismatch in +=");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("max_abs_diff: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

}  // namespace ssrent
