// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ssrent/cmatrix.hpp"
#include "ssrent/fock.hpp"

namespace ssrent {

/// Hermitian, positive-semidefinite, trace-one operator over an explicit
/// ordered occupation basis. Hermiticity and trace are checked at
/// construction; positivity is checked on demand (validate_psd) since it
/// needs a diagonalization.
class DensityOperator {
 public:
  static DensityOperator make(LayoutPtr layout, BasisPtr basis, CMatrix matrix,
                              double expected_trace = 1.0);

  const ModeLayout& layout() const { return *layout_; }
  const LayoutPtr& layout_ptr() const { return layout_; }
  const Basis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const CMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.size(); }
  double trace_real() const { return mat_.trace().real(); }

  /// Throws unless every eigenvalue is >= -tol::kPsd.
  void validate_psd() const;

 private:
  DensityOperator(LayoutPtr layout, BasisPtr basis, CMatrix matrix)
      : layout_(std::move(layout)), basis_(std::move(basis)),
        mat_(std::move(matrix)) {}

  LayoutPtr layout_;
  BasisPtr basis_;
  CMatrix mat_;
};

struct KetAmplitude {
  Complex amplitude;
  OccupationState ket;
};

/// |psi><psi| for psi = sum of the given amplitudes; kets must be distinct,
/// the norm must be 1 within norm_tol, and the basis is the kets sorted
/// lexicographically. The state is renormalized exactly.
DensityOperator density_from_pure(const LayoutPtr& layout,
                                  std::vector<KetAmplitude> terms,
                                  double norm_tol = 1e-9);

/// Convex mixture over the union basis; weights must be nonnegative and sum
/// to 1 within weight_tol (renormalized exactly).
DensityOperator density_from_mixture(
    std::span<const std::pair<double, DensityOperator>> parts,
    double weight_tol = 1e-9);

/// Same operator written on a larger basis (target must contain every basis
/// ket of the input, compared by occupation bits).
DensityOperator embed_in_basis(const DensityOperator& op,
                               const BasisPtr& target);

/// Rewrites both operators on the lexicographically sorted union of their
/// bases so they can be compared or fed to decide().
std::pair<DensityOperator, DensityOperator> align_bases(
    const DensityOperator& a, const DensityOperator& b);

/// Eigenvalues of a Hermitian matrix, descending, with the worst-case
/// residual max_i |(A v)_i - lambda v_i| over all returned pairs.
struct SpectrumResult {
  std::vector<double> eigenvalues;
  double residual = 0.0;
};

/// Cyclic complex Jacobi diagonalization. Throws if the input fails the
/// Hermiticity tolerance or the iteration does not converge to a residual
/// below tol::kEigenResidual (it always does for the matrix sizes here).
SpectrumResult hermitian_eigenvalues(const CMatrix& m);
SpectrumResult hermitian_eigenvalues(const DensityOperator& rho);

/// tr(rho^2). Equals 1 exactly on pure states, 1/d on maximally mixed ones.
double purity(const DensityOperator& rho);

/// Raw partial-trace kernel over arbitrary mode positions, usable on
/// matrices that are not valid density operators (test oracles compare
/// against it entry-wise on matrix units).
///
/// The sign convention is the one induced by creation-operator strings in
/// canonical order: the matrix element <n|tr_T(X)|m> picks up
/// (-1)^(sum over occupied kept modes k of |traced occupations below k|)
/// for bra and ket sides. With the traced block contiguous at the end of the
/// canonical order all factors are +1, and for every state that is
/// block-diagonal in local parity the convention is immaterial.
struct PartialTraceResult {
  LayoutPtr layout;
  BasisPtr basis;
  CMatrix matrix;
};
PartialTraceResult partial_trace_kernel(const CMatrix& m,
                                        std::span<const OccupationState> basis,
                                        const ModeLayout& layout,
                                        std::span<const std::size_t> keep);

/// Reduced operator on the kept party's Fock basis (the other parties are
/// traced out). Trace, Hermiticity, and positivity are preserved.
DensityOperator fermionic_partial_trace(const DensityOperator& rho,
                                        std::string_view keep_party);

/// Reduced operator on an arbitrary subset of modes (e.g. the catalyst's
/// modes of both parties).
DensityOperator fermionic_partial_trace_modes(
    const DensityOperator& rho, std::span<const std::string> keep_modes);

}  // namespace ssrent
