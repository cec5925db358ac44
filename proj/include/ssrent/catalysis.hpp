// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "ssrent/transform.hpp"

namespace ssrent {

/// Parameters of the four-mode catalyst family
///   tau = R tau_even + (1-R) tau_odd,    chi_tau = 0,
/// where each sector part is the pure two-level state with probability r and
/// coherence gamma = phase * sqrt(r (1-r)), so the sector projections are
/// pure by construction.
struct CatalystSpec {
  double inter_weight = 0.5;  ///< R, weight of the even-even sector
  double even_prob = 0.5;     ///< r1, probability inside the even-even sector
  double odd_prob = 0.5;      ///< r2, probability inside the odd-odd sector
  Complex even_phase{1.0, 0.0};
  Complex odd_phase{1.0, 0.0};
};

/// Builds the catalyst state on a two-orbital layout (basis |00,11>,
/// |01,10>, |10,01>, |11,00>). Throws if a probability leaves [0,1].
DensityOperator build_catalyst(const CatalystSpec& spec,
                               const LayoutPtr& catalyst_layout);

/// Joint state rho ∧ tau on the composed Fock space: every pair of basis
/// kets is wedged with its anticommutation sign and the joint basis is
/// sorted lexicographically. Trace, Hermiticity and positivity carry over.
DensityOperator wedge_density(const DensityOperator& rho,
                              const DensityOperator& tau,
                              const LayoutPtr& joint_layout);

struct SearchOptions {
  double grid_step = 0.05;
  /// 1 keeps both phases at +1; k > 1 scans the k-th roots of unity for
  /// each phase as the two innermost lattice axes.
  int phase_divisions = 1;
  double majorization_tol = tol::kMajorization;
};

/// Outcome of a lattice scan over CatalystSpec. `found` implies the joint
/// report's verdict is Possible; otherwise `rejections` histograms every
/// examined candidate by the step that rejected it.
struct CatalysisResult {
  bool found = false;
  std::optional<CatalystSpec> catalyst;
  std::optional<TransformationReport> joint_report;
  std::uint64_t examined = 0;
  std::map<FailingStep, std::uint64_t> rejections;
};

/// Scans the catalyst lattice (R ascending, then r1, then r2, then phases)
/// and returns the first candidate tau for which
///   decide(rho ∧ tau, sigma ∧ tau) = Possible.
/// Deterministic; exhaustion is a normal result, not an error. The system
/// layout must have two parties; the catalyst lives on the primed copy of
/// the two-orbital layout.
CatalysisResult search_catalyst(const DensityOperator& rho,
                                const DensityOperator& sigma, SsrKind ssr,
                                const SearchOptions& options = {});

}  // namespace ssrent
