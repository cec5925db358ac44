// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssrent/operators.hpp"

namespace ssrent {

/// The local superselection rule that splits the Fock space into sectors.
enum class SsrKind {
  LocalParity,
  LocalParticleNumber,
};

/// Per-party conserved quantum numbers of one sector: parity bits under
/// LocalParity, particle counts under LocalParticleNumber. Value type with
/// lexicographic ordering; at most 8 parties.
struct SectorLabel {
  std::array<std::int8_t, 8> q{};
  std::uint8_t parties = 0;

  friend auto operator<=>(const SectorLabel&, const SectorLabel&) = default;

  /// "ee" / "oo" for parity, "0-2" / "1-1" for particle number.
  std::string str(SsrKind kind) const;
};

SectorLabel sector_of(const OccupationState& state, SsrKind ssr);

/// One sector of a decomposition. `projection` is the normalized (trace-one)
/// block, present only when the weight is meaningfully nonzero; its basis is
/// the sector's slice of the parent basis, and `basis_indices` locates that
/// slice in the parent.
struct Sector {
  SectorLabel label;
  double weight = 0.0;
  std::vector<std::size_t> basis_indices;
  std::optional<DensityOperator> projection;
};

/// rho = sum_j weight_j * projection_j + chi. Sectors are sorted by label
/// and cover every label present in the basis, including zero-weight ones;
/// chi holds exactly the cross-sector entries (it is not an operator of its
/// own: not positive, possibly traceless).
struct SectorDecomposition {
  SsrKind ssr{};
  LayoutPtr layout;
  BasisPtr basis;
  std::vector<Sector> sectors;
  CMatrix chi;
};

SectorDecomposition decompose(const DensityOperator& rho, SsrKind ssr);

/// Puts a decomposition back together; inverse of decompose up to rounding.
DensityOperator reassemble(const SectorDecomposition& d);

/// rho - chi: the block-diagonal part reachable by SSR-restricted
/// operations. Trace-preserving and idempotent.
DensityOperator physical_part(const DensityOperator& rho, SsrKind ssr);

}  // namespace ssrent
