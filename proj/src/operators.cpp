// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#include "ssrent/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ssrent/tolerances.hpp"

namespace ssrent {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("operators: " + msg);
}

double frobenius(const CMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

DensityOperator DensityOperator::make(LayoutPtr layout, BasisPtr basis,
                                      CMatrix matrix, double expected_trace) {
  if (!layout || !basis) fail("DensityOperator: null layout or basis");
  if (basis->empty()) fail("DensityOperator: empty basis");
  if (basis->size() != matrix.size())
    fail("DensityOperator: basis and matrix dimensions differ");

  std::vector<std::uint64_t> bits;
  bits.reserve(basis->size());
  for (const OccupationState& s : *basis) {
    if (&s.layout() != layout.get())
      fail("DensityOperator: basis ket built over a different layout");
    bits.push_back(s.bits());
  }
  std::sort(bits.begin(), bits.end());
  if (std::adjacent_find(bits.begin(), bits.end()) != bits.end())
    fail("DensityOperator: duplicate basis ket");

  if (matrix.hermiticity_defect() > tol::kHermitian)
    fail("DensityOperator: matrix is not Hermitian within tolerance");
  const Complex tr = matrix.trace();
  if (std::abs(tr.imag()) > tol::kTrace ||
      std::abs(tr.real() - expected_trace) > tol::kTrace)
    fail("DensityOperator: trace differs from " +
         std::to_string(expected_trace));

  return DensityOperator(std::move(layout), std::move(basis),
                         std::move(matrix));
}

void DensityOperator::validate_psd() const {
  const SpectrumResult s = hermitian_eigenvalues(mat_);
  if (!s.eigenvalues.empty() && s.eigenvalues.back() < -tol::kPsd)
    fail("DensityOperator: negative eigenvalue " +
         std::to_string(s.eigenvalues.back()));
}

DensityOperator density_from_pure(const LayoutPtr& layout,
                                  std::vector<KetAmplitude> terms,
                                  double norm_tol) {
  if (terms.empty()) fail("density_from_pure: no amplitudes");
  std::sort(terms.begin(), terms.end(),
            [](const KetAmplitude& a, const KetAmplitude& b) {
              return a.ket.lex_key() < b.ket.lex_key();
            });
  double norm2 = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0 && terms[i].ket == terms[i - 1].ket)
      fail("density_from_pure: duplicate ket " + terms[i].ket.str());
    norm2 += std::norm(terms[i].amplitude);
  }
  if (std::abs(norm2 - 1.0) > norm_tol)
    fail("density_from_pure: amplitudes have norm^2 = " +
         std::to_string(norm2));

  auto basis = std::make_shared<Basis>();
  basis->reserve(terms.size());
  for (const KetAmplitude& t : terms) basis->push_back(t.ket);

  CMatrix m(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = 0; j < terms.size(); ++j)
      m(i, j) = terms[i].amplitude * std::conj(terms[j].amplitude) / norm2;
  return DensityOperator::make(layout, std::move(basis), std::move(m));
}

DensityOperator density_from_mixture(
    std::span<const std::pair<double, DensityOperator>> parts,
    double weight_tol) {
  if (parts.empty()) fail("density_from_mixture: no components");
  const LayoutPtr& layout = parts.front().second.layout_ptr();
  double total = 0.0;
  std::map<std::uint64_t, OccupationState> by_bits;
  for (const auto& [w, op] : parts) {
    if (w < -tol::kPsd) fail("density_from_mixture: negative weight");
    if (!op.layout().equivalent(*layout))
      fail("density_from_mixture: component layouts differ");
    total += w;
    for (const OccupationState& s : op.basis()) by_bits.emplace(s.bits(), s);
  }
  if (std::abs(total - 1.0) > weight_tol)
    fail("density_from_mixture: weights sum to " + std::to_string(total));

  auto basis = std::make_shared<Basis>();
  for (const auto& [bits, state] : by_bits)
    basis->push_back(OccupationState(bits, layout));
  std::sort(basis->begin(), basis->end(),
            [](const OccupationState& a, const OccupationState& b) {
              return a.lex_key() < b.lex_key();
            });

  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < basis->size(); ++i)
    index.emplace((*basis)[i].bits(), i);

  CMatrix m(basis->size());
  for (const auto& [w, op] : parts) {
    std::vector<std::size_t> to(op.dim());
    for (std::size_t i = 0; i < op.dim(); ++i)
      to[i] = index.at(op.basis()[i].bits());
    for (std::size_t i = 0; i < op.dim(); ++i)
      for (std::size_t j = 0; j < op.dim(); ++j)
        m(to[i], to[j]) += (w / total) * op.matrix()(i, j);
  }
  return DensityOperator::make(layout, std::move(basis), std::move(m));
}

DensityOperator embed_in_basis(const DensityOperator& op,
                               const BasisPtr& target) {
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < target->size(); ++i)
    index.emplace((*target)[i].bits(), i);
  CMatrix m(target->size());
  std::vector<std::size_t> to(op.dim());
  for (std::size_t i = 0; i < op.dim(); ++i) {
    auto it = index.find(op.basis()[i].bits());
    if (it == index.end())
      fail("embed_in_basis: target basis lacks ket " + op.basis()[i].str());
    to[i] = it->second;
  }
  for (std::size_t i = 0; i < op.dim(); ++i)
    for (std::size_t j = 0; j < op.dim(); ++j)
      m(to[i], to[j]) = op.matrix()(i, j);
  return DensityOperator::make(op.layout_ptr(), target, std::move(m),
                               op.trace_real());
}

std::pair<DensityOperator, DensityOperator> align_bases(
    const DensityOperator& a, const DensityOperator& b) {
  if (!a.layout().equivalent(b.layout()))
    fail("align_bases: layouts differ");
  std::map<std::uint64_t, OccupationState> by_bits;
  for (const OccupationState& s : a.basis()) by_bits.emplace(s.bits(), s);
  for (const OccupationState& s : b.basis())
    by_bits.emplace(s.bits(), OccupationState(s.bits(), a.layout_ptr()));
  auto basis = std::make_shared<Basis>();
  for (const auto& [bits, state] : by_bits) basis->push_back(state);
  std::sort(basis->begin(), basis->end(),
            [](const OccupationState& x, const OccupationState& y) {
              return x.lex_key() < y.lex_key();
            });
  // b's kets point at b's layout object; rebuild them over a's so both
  // results share one layout.
  auto b_basis = std::make_shared<Basis>();
  for (const OccupationState& s : b.basis())
    b_basis->push_back(OccupationState(s.bits(), a.layout_ptr()));
  DensityOperator b_over_a = DensityOperator::make(
      a.layout_ptr(), std::move(b_basis), b.matrix(), b.trace_real());
  return {embed_in_basis(a, basis), embed_in_basis(b_over_a, basis)};
}

// ---------------------------------------------------------------------------
// Cyclic complex Jacobi diagonalization
// ---------------------------------------------------------------------------

SpectrumResult hermitian_eigenvalues(const CMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  if (m.hermiticity_defect() > tol::kHermitian)
    fail("hermitian_eigenvalues: input is not Hermitian within tolerance");

  CMatrix a = m;
  CMatrix vec = CMatrix::identity(n);
  const double scale = std::max(1.0, frobenius(m));
  const double off_target = 1e-14 * scale;

  constexpr int kMaxSweeps = 50;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (a.offdiagonal_norm() <= off_target) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex z = a(p, q);
        const double h = std::abs(z);
        if (h == 0.0) continue;
        const Complex u = z / h;  // unit phase absorbed into the rotation

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (app - aqq) / (2.0 * h);
        const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
        const double t = 1.0 / (tau + sgn * std::sqrt(tau * tau + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) = app + t * h;
        a(q, q) = aqq - t * h;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = aip * (u * c) + aiq * s;
          a(i, q) = aiq * c - aip * (u * s);
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Complex vip = vec(i, p);
          const Complex viq = vec(i, q);
          vec(i, p) = vip * (u * c) + viq * s;
          vec(i, q) = viq * c - vip * (u * s);
        }
      }
    }
  }
  if (sweep == kMaxSweeps && a.offdiagonal_norm() > off_target)
    throw std::runtime_error("hermitian_eigenvalues: Jacobi did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     return a(i, i).real() > a(j, j).real();
                   });

  SpectrumResult result;
  result.eigenvalues.reserve(n);
  for (std::size_t k : order) result.eigenvalues.push_back(a(k, k).real());

  // Residual against the *input* matrix, per eigenpair, infinity norm.
  double residual = 0.0;
  for (std::size_t rank = 0; rank < n; ++rank) {
    const std::size_t k = order[rank];
    const double lambda = result.eigenvalues[rank];
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * vec(j, k);
      residual = std::max(residual, std::abs(acc - lambda * vec(i, k)));
    }
  }
  result.residual = residual;
  if (residual > tol::kEigenResidual)
    throw std::runtime_error(
        "hermitian_eigenvalues: residual above tolerance");
  return result;
}

SpectrumResult hermitian_eigenvalues(const DensityOperator& rho) {
  return hermitian_eigenvalues(rho.matrix());
}

double purity(const DensityOperator& rho) {
  const CMatrix& m = rho.matrix();
  Complex p = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) p += m(i, j) * m(j, i);
  return p.real();
}

// ---------------------------------------------------------------------------
// Fermionic partial trace
// ---------------------------------------------------------------------------

namespace {

// Exponent of the anticommutation sign collected while annihilating (or
// creating) the kept occupied modes through the traced occupations below
// them in canonical order.
int crossing_exponent(std::uint64_t kept_occ, std::uint64_t traced_occ) {
  int e = 0;
  std::uint64_t rest = kept_occ;
  while (rest) {
    const int k = std::countr_zero(rest);
    rest &= rest - 1;
    e += std::popcount(traced_occ & ((std::uint64_t{1} << k) - 1));
  }
  return e;
}

LayoutPtr reduced_layout(const ModeLayout& layout, std::uint64_t keep_mask) {
  std::vector<Party> parties;
  for (const Party& p : layout.parties()) {
    Party rp{p.label, {}};
    for (const std::string& m : p.modes)
      if ((keep_mask >> layout.canonical_index(m)) & 1u)
        rp.modes.push_back(m);
    if (!rp.modes.empty()) parties.push_back(std::move(rp));
  }
  std::vector<std::string> canonical;
  for (std::size_t i = 0; i < layout.mode_count(); ++i)
    if ((keep_mask >> i) & 1u) canonical.push_back(layout.canonical_order()[i]);
  return ModeLayout::create(std::move(parties), std::move(canonical));
}

}  // namespace

PartialTraceResult partial_trace_kernel(const CMatrix& m,
                                        std::span<const OccupationState> basis,
                                        const ModeLayout& layout,
                                        std::span<const std::size_t> keep) {
  if (m.size() != basis.size())
    fail("partial_trace_kernel: basis and matrix dimensions differ");
  if (keep.empty()) fail("partial_trace_kernel: nothing kept");

  std::uint64_t keep_mask = 0;
  for (std::size_t pos : keep) {
    if (pos >= layout.mode_count())
      fail("partial_trace_kernel: mode position out of range");
    keep_mask |= std::uint64_t{1} << pos;
  }
  const std::uint64_t traced_mask = ~keep_mask;

  // Compact a kept-bit pattern to positions 0..k-1 in canonical order.
  std::vector<int> compact_pos(layout.mode_count(), -1);
  {
    int next = 0;
    for (std::size_t i = 0; i < layout.mode_count(); ++i)
      if ((keep_mask >> i) & 1u) compact_pos[i] = next++;
  }
  auto compact = [&](std::uint64_t kept_bits) {
    std::uint64_t out = 0;
    while (kept_bits) {
      const int k = std::countr_zero(kept_bits);
      kept_bits &= kept_bits - 1;
      out |= std::uint64_t{1} << compact_pos[k];
    }
    return out;
  };

  LayoutPtr rlayout = reduced_layout(layout, keep_mask);

  auto rbasis = std::make_shared<Basis>();
  std::map<std::uint64_t, std::size_t> rindex;
  {
    std::vector<std::uint64_t> seen;
    for (const OccupationState& s : basis)
      seen.push_back(compact(s.bits() & keep_mask));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::vector<OccupationState> states;
    for (std::uint64_t b : seen) states.emplace_back(b, rlayout);
    std::sort(states.begin(), states.end(),
              [](const OccupationState& a, const OccupationState& b) {
                return a.lex_key() < b.lex_key();
              });
    for (std::size_t i = 0; i < states.size(); ++i)
      rindex.emplace(states[i].bits(), i);
    *rbasis = std::move(states);
  }

  // Group basis indices by traced occupation; only diagonal-in-traced pairs
  // survive the contraction.
  std::map<std::uint64_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < basis.size(); ++i)
    groups[basis[i].bits() & traced_mask].push_back(i);

  CMatrix out(rbasis->size());
  for (const auto& [traced, members] : groups) {
    for (std::size_t i : members) {
      const std::uint64_t ki = basis[i].bits() & keep_mask;
      const std::size_t ri = rindex.at(compact(ki));
      const int ei = crossing_exponent(ki, traced);
      for (std::size_t j : members) {
        const std::uint64_t kj = basis[j].bits() & keep_mask;
        const std::size_t rj = rindex.at(compact(kj));
        const int sign =
            ((ei + crossing_exponent(kj, traced)) % 2 == 0) ? +1 : -1;
        out(ri, rj) += static_cast<double>(sign) * m(i, j);
      }
    }
  }
  return PartialTraceResult{std::move(rlayout), std::move(rbasis),
                            std::move(out)};
}

DensityOperator fermionic_partial_trace(const DensityOperator& rho,
                                        std::string_view keep_party) {
  const std::size_t party = rho.layout().party_index(keep_party);
  PartialTraceResult r =
      partial_trace_kernel(rho.matrix(), rho.basis(), rho.layout(),
                           rho.layout().party_positions(party));
  return DensityOperator::make(std::move(r.layout), std::move(r.basis),
                               std::move(r.matrix), rho.trace_real());
}

DensityOperator fermionic_partial_trace_modes(
    const DensityOperator& rho, std::span<const std::string> keep_modes) {
  std::vector<std::size_t> keep;
  keep.reserve(keep_modes.size());
  for (const std::string& m : keep_modes)
    keep.push_back(rho.layout().canonical_index(m));
  PartialTraceResult r =
      partial_trace_kernel(rho.matrix(), rho.basis(), rho.layout(), keep);
  return DensityOperator::make(std::move(r.layout), std::move(r.basis),
                               std::move(r.matrix), rho.trace_real());
}

}  // namespace ssrent
