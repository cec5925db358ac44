// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#include "ssrent/ssr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ssrent/tolerances.hpp"

namespace ssrent {

std::string SectorLabel::str(SsrKind kind) const {
  std::string out;
  for (std::uint8_t i = 0; i < parties; ++i) {
    if (kind == SsrKind::LocalParity) {
      out += (q[i] % 2 == 0) ? 'e' : 'o';
    } else {
      if (i) out += '-';
      out += std::to_string(static_cast<int>(q[i]));
    }
  }
  return out;
}

SectorLabel sector_of(const OccupationState& state, SsrKind ssr) {
  const std::size_t parties = state.layout().party_count();
  SectorLabel label;
  label.parties = static_cast<std::uint8_t>(parties);
  for (std::size_t p = 0; p < parties; ++p) {
    const int n = state.local_number(p);
    label.q[p] = static_cast<std::int8_t>(
        ssr == SsrKind::LocalParity ? (n & 1) : n);
  }
  return label;
}

SectorDecomposition decompose(const DensityOperator& rho, SsrKind ssr) {
  const Basis& basis = rho.basis();
  const CMatrix& m = rho.matrix();

  std::vector<SectorLabel> label_of(basis.size());
  std::map<SectorLabel, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    label_of[i] = sector_of(basis[i], ssr);
    groups[label_of[i]].push_back(i);
  }

  SectorDecomposition d;
  d.ssr = ssr;
  d.layout = rho.layout_ptr();
  d.basis = rho.basis_ptr();
  d.chi = CMatrix(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (label_of[i] != label_of[j]) d.chi(i, j) = m(i, j);

  for (auto& [label, indices] : groups) {
    Sector sector;
    sector.label = label;
    sector.basis_indices = indices;
    double weight = 0.0;
    for (std::size_t i : indices) weight += m(i, i).real();
    if (weight < 0.0 && weight > -tol::kNullProjection) weight = 0.0;
    sector.weight = weight;

    if (weight > tol::kNullProjection) {
      auto sub_basis = std::make_shared<Basis>();
      sub_basis->reserve(indices.size());
      for (std::size_t i : indices) sub_basis->push_back(basis[i]);
      CMatrix block(indices.size());
      for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b < indices.size(); ++b)
          block(a, b) = m(indices[a], indices[b]) / weight;
      sector.projection = DensityOperator::make(
          d.layout, std::move(sub_basis), std::move(block));
    }
    d.sectors.push_back(std::move(sector));
  }
  return d;
}

DensityOperator reassemble(const SectorDecomposition& d) {
  CMatrix m = d.chi;
  for (const Sector& s : d.sectors) {
    if (!s.projection) continue;
    const CMatrix& block = s.projection->matrix();
    for (std::size_t a = 0; a < s.basis_indices.size(); ++a)
      for (std::size_t b = 0; b < s.basis_indices.size(); ++b)
        m(s.basis_indices[a], s.basis_indices[b]) +=
            s.weight * block(a, b);
  }
  return DensityOperator::make(d.layout, d.basis, std::move(m));
}

DensityOperator physical_part(const DensityOperator& rho, SsrKind ssr) {
  const Basis& basis = rho.basis();
  std::vector<SectorLabel> label_of(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    label_of[i] = sector_of(basis[i], ssr);

  CMatrix m = rho.matrix();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (label_of[i] != label_of[j]) m(i, j) = 0.0;
  return DensityOperator::make(rho.layout_ptr(), rho.basis_ptr(),
                               std::move(m));
}

}  // namespace ssrent
