// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssrent/majorization.hpp"
#include "ssrent/ssr.hpp"

namespace ssrent {

enum class Verdict { Possible, Impossible, Undecidable };

/// Which of the three checks rejected the transformation. ChiMismatch is
/// step 1, SectorWeightMismatch step 2, and both MajorizationFailure and
/// ImpurityInSector belong to step 3.
enum class FailingStep {
  ChiMismatch,
  SectorWeightMismatch,
  MajorizationFailure,
  ImpurityInSector,
};

std::string to_string(Verdict v);
std::string to_string(FailingStep s);

/// Per-sector diagnostics. Purities are present for sectors with nonzero
/// weight; Schmidt vectors only where the projection passed the purity
/// gate; majorization_ok only where both Schmidt vectors exist.
struct SectorComparison {
  SectorLabel label;
  double weight_rho = 0.0;
  double weight_sigma = 0.0;
  std::optional<double> purity_rho;
  std::optional<double> purity_sigma;
  std::optional<ProbabilityVector> schmidt_rho;
  std::optional<ProbabilityVector> schmidt_sigma;
  std::optional<bool> majorization_ok;
};

/// Outcome of the three-step decision procedure, with the first failing
/// step (in step order) and the full per-sector diagnostic table.
struct TransformationReport {
  Verdict verdict = Verdict::Undecidable;
  std::optional<FailingStep> failing_step;
  std::vector<SectorComparison> per_sector;
  double chi_distance = 0.0;  ///< max entry-wise |chi_rho - chi_sigma|
};

/// Descending spectrum of the reduced state of `keep` — the Schmidt
/// coefficients when the projection is pure. Throws unless the projection's
/// purity is at least 1 - tol::kSectorPurity.
ProbabilityVector schmidt_vector(const DensityOperator& sector_projection,
                                 std::string_view keep);

/// Decides whether rho can be turned into sigma by LOCC restricted by the
/// local SSR:
///   step 1: chi_rho == chi_sigma entry-wise (tol::kDecide),
///   step 2: equal sector weights (tol::kDecide),
///   step 3: per sector with weight above tol::kZeroWeight, both projections
///           pure and schmidt(rho_s) ≺ schmidt(sigma_s).
/// A mixed projection in an active sector makes the verdict Undecidable
/// rather than Impossible: majorization says nothing about mixed-state
/// convertibility. Both operators must share the layout and basis.
/// `majorization_tol` is the per-partial-sum slack of step 3.
TransformationReport decide(const DensityOperator& rho,
                            const DensityOperator& sigma, SsrKind ssr,
                            double majorization_tol = tol::kMajorization);

}  // namespace ssrent
