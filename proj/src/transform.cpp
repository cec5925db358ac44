// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#include "ssrent/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "ssrent/operators.hpp"
#include "ssrent/tolerances.hpp"

namespace ssrent {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Possible: return "possible";
    case Verdict::Impossible: return "impossible";
    case Verdict::Undecidable: return "undecidable";
  }
  return "?";
}

std::string to_string(FailingStep s) {
  switch (s) {
    case FailingStep::ChiMismatch: return "chi_mismatch";
    case FailingStep::SectorWeightMismatch: return "sector_weight_mismatch";
    case FailingStep::MajorizationFailure: return "majorization_failure";
    case FailingStep::ImpurityInSector: return "impurity_in_sector";
  }
  return "?";
}

ProbabilityVector schmidt_vector(const DensityOperator& sector_projection,
                                 std::string_view keep) {
  const double p = purity(sector_projection);
  if (p < 1.0 - tol::kSectorPurity)
    throw std::invalid_argument(
        "schmidt_vector: sector projection is mixed (purity " +
        std::to_string(p) + ")");
  const DensityOperator reduced =
      fermionic_partial_trace(sector_projection, keep);
  return ProbabilityVector::make(hermitian_eigenvalues(reduced).eigenvalues);
}

namespace {

// Sector weights may be exactly zero on one side only; the comparison table
// must still line up, which decompose guarantees by deriving sector lists
// from the shared basis.
void check_same_frame(const DensityOperator& rho,
                      const DensityOperator& sigma) {
  if (!rho.layout().equivalent(sigma.layout()))
    throw std::invalid_argument("decide: layouts differ");
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("decide: bases differ in size");
  for (std::size_t i = 0; i < rho.dim(); ++i)
    if (!(rho.basis()[i] == sigma.basis()[i]))
      throw std::invalid_argument("decide: bases differ at position " +
                                  std::to_string(i));
}

}  // namespace

TransformationReport decide(const DensityOperator& rho,
                            const DensityOperator& sigma, SsrKind ssr,
                            double majorization_tol) {
  check_same_frame(rho, sigma);
  const std::string keep = rho.layout().parties().front().label;

  const SectorDecomposition drho = decompose(rho, ssr);
  const SectorDecomposition dsigma = decompose(sigma, ssr);

  TransformationReport report;
  report.chi_distance = max_abs_diff(drho.chi, dsigma.chi);

  bool weight_mismatch = false;
  bool impurity = false;
  bool majorization_failure = false;

  for (std::size_t s = 0; s < drho.sectors.size(); ++s) {
    const Sector& sr = drho.sectors[s];
    const Sector& ss = dsigma.sectors[s];

    SectorComparison cmp;
    cmp.label = sr.label;
    cmp.weight_rho = sr.weight;
    cmp.weight_sigma = ss.weight;
    if (std::abs(sr.weight - ss.weight) > tol::kDecide)
      weight_mismatch = true;

    const bool active =
        std::max(sr.weight, ss.weight) > tol::kZeroWeight;
    if (active) {
      if (sr.projection) cmp.purity_rho = purity(*sr.projection);
      if (ss.projection) cmp.purity_sigma = purity(*ss.projection);
      const bool rho_pure =
          cmp.purity_rho && *cmp.purity_rho >= 1.0 - tol::kSectorPurity;
      const bool sigma_pure =
          cmp.purity_sigma && *cmp.purity_sigma >= 1.0 - tol::kSectorPurity;
      if (rho_pure) cmp.schmidt_rho = schmidt_vector(*sr.projection, keep);
      if (sigma_pure)
        cmp.schmidt_sigma = schmidt_vector(*ss.projection, keep);
      if (!rho_pure || !sigma_pure) {
        impurity = true;
      } else {
        cmp.majorization_ok = majorizes(*cmp.schmidt_sigma, *cmp.schmidt_rho,
                                        majorization_tol);
        if (!*cmp.majorization_ok) majorization_failure = true;
      }
    }
    report.per_sector.push_back(std::move(cmp));
  }

  // Failures are reported in the paper's step order.
  if (report.chi_distance > tol::kDecide) {
    report.verdict = Verdict::Impossible;
    report.failing_step = FailingStep::ChiMismatch;
  } else if (weight_mismatch) {
    report.verdict = Verdict::Impossible;
    report.failing_step = FailingStep::SectorWeightMismatch;
  } else if (impurity) {
    report.verdict = Verdict::Undecidable;
    report.failing_step = FailingStep::ImpurityInSector;
  } else if (majorization_failure) {
    report.verdict = Verdict::Impossible;
    report.failing_step = FailingStep::MajorizationFailure;
  } else {
    report.verdict = Verdict::Possible;
  }
  return report;
}

}  // namespace ssrent
