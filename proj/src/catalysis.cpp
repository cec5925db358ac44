// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#include "ssrent/catalysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace ssrent {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("catalysis: " + msg);
}

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    fail(std::string(name) + " must lie in [0, 1]");
}

Complex unit_phase(Complex phase, const char* name) {
  const double mag = std::abs(phase);
  if (mag == 0.0) fail(std::string(name) + " must be nonzero");
  return phase / mag;
}

// Precomputed wedge of two fixed bases: for every factor pair (i, j), the
// index of the joint ket in the lex-sorted joint basis and the
// anticommutation sign. Independent of the matrix values, so a search can
// build it once and reuse it for every candidate catalyst.
struct WedgePlan {
  LayoutPtr joint;
  BasisPtr basis;
  std::vector<std::size_t> index;  // (i * nb + j) -> joint basis position
  std::vector<double> sign;
  std::size_t na = 0, nb = 0;
};

WedgePlan make_wedge_plan(const Basis& a, const Basis& b,
                          const LayoutPtr& joint_layout) {
  WedgePlan plan;
  plan.joint = joint_layout;
  plan.na = a.size();
  plan.nb = b.size();

  std::vector<SignedState> wedged;
  wedged.reserve(a.size() * b.size());
  for (const OccupationState& sa : a)
    for (const OccupationState& sb : b)
      wedged.push_back(wedge_state(sa, sb, joint_layout));

  std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
  keyed.reserve(wedged.size());
  for (std::size_t k = 0; k < wedged.size(); ++k)
    keyed.emplace_back(wedged[k].state.lex_key(), k);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t k = 1; k < keyed.size(); ++k)
    if (keyed[k].first == keyed[k - 1].first)
      fail("wedge_density: joint kets collide");

  auto basis = std::make_shared<Basis>();
  basis->reserve(wedged.size());
  plan.index.resize(wedged.size());
  plan.sign.resize(wedged.size());
  for (std::size_t pos = 0; pos < keyed.size(); ++pos) {
    const std::size_t k = keyed[pos].second;
    basis->push_back(wedged[k].state);
    plan.index[k] = pos;
    plan.sign[k] = static_cast<double>(wedged[k].sign);
  }
  plan.basis = std::move(basis);
  return plan;
}

DensityOperator apply_wedge_plan(const WedgePlan& plan,
                                 const DensityOperator& a,
                                 const DensityOperator& b) {
  const CMatrix& ma = a.matrix();
  const CMatrix& mb = b.matrix();
  CMatrix m(plan.index.size());
  for (std::size_t i = 0; i < plan.na; ++i)
    for (std::size_t j = 0; j < plan.nb; ++j) {
      const std::size_t ij = i * plan.nb + j;
      for (std::size_t k = 0; k < plan.na; ++k)
        for (std::size_t l = 0; l < plan.nb; ++l) {
          const std::size_t kl = k * plan.nb + l;
          m(plan.index[ij], plan.index[kl]) =
              plan.sign[ij] * plan.sign[kl] * ma(i, k) * mb(j, l);
        }
    }
  return DensityOperator::make(plan.joint, plan.basis, std::move(m));
}

// The catalyst's two-level sector bases, located inside a lex-sorted
// two-orbital basis by local parity.
struct CatalystFrame {
  LayoutPtr layout;
  BasisPtr basis;
  std::size_t even_lo, even_hi;  // |00,11>, |11,00>
  std::size_t odd_lo, odd_hi;    // |01,10>, |10,01>
};

CatalystFrame catalyst_frame(const LayoutPtr& layout) {
  if (layout->party_count() != 2 ||
      layout->parties()[0].modes.size() != 2 ||
      layout->parties()[1].modes.size() != 2)
    fail("build_catalyst: catalyst layout must be two orbitals of two modes");

  BasisFilter two_particle_spin_zero;
  two_particle_spin_zero.total_number = 2;
  two_particle_spin_zero.net_spin = 0;

  CatalystFrame frame;
  frame.layout = layout;
  frame.basis = std::make_shared<Basis>(
      enumerate_basis(layout, two_particle_spin_zero));
  if (frame.basis->size() != 4)
    fail("build_catalyst: unexpected catalyst basis");

  std::vector<std::size_t> even, odd;
  for (std::size_t i = 0; i < 4; ++i) {
    const OccupationState& s = (*frame.basis)[i];
    ((s.local_parity(0) == 0) ? even : odd).push_back(i);
  }
  // Within a sector, lex order puts the ket with occupied B-orbital first
  // (|00,11> before |11,00>), which carries the probability r.
  frame.even_lo = even[0];
  frame.even_hi = even[1];
  frame.odd_lo = odd[0];
  frame.odd_hi = odd[1];
  return frame;
}

CMatrix catalyst_matrix(const CatalystFrame& frame, const CatalystSpec& spec) {
  const double r_even = spec.even_prob;
  const double r_odd = spec.odd_prob;
  const Complex gamma_even =
      spec.even_phase * std::sqrt(r_even * (1.0 - r_even));
  const Complex gamma_odd = spec.odd_phase * std::sqrt(r_odd * (1.0 - r_odd));
  const double w_even = spec.inter_weight;
  const double w_odd = 1.0 - spec.inter_weight;

  CMatrix m(4);
  m(frame.even_lo, frame.even_lo) = w_even * r_even;
  m(frame.even_hi, frame.even_hi) = w_even * (1.0 - r_even);
  m(frame.even_lo, frame.even_hi) = w_even * gamma_even;
  m(frame.even_hi, frame.even_lo) = w_even * std::conj(gamma_even);
  m(frame.odd_lo, frame.odd_lo) = w_odd * r_odd;
  m(frame.odd_hi, frame.odd_hi) = w_odd * (1.0 - r_odd);
  m(frame.odd_lo, frame.odd_hi) = w_odd * gamma_odd;
  m(frame.odd_hi, frame.odd_lo) = w_odd * std::conj(gamma_odd);
  return m;
}

std::vector<double> lattice_values(double step) {
  std::vector<double> values;
  for (int k = 0;; ++k) {
    const double v = k * step;
    if (v > 1.0 + 1e-12) break;
    values.push_back(std::min(v, 1.0));
    if (v >= 1.0) break;
  }
  return values;
}

}  // namespace

DensityOperator build_catalyst(const CatalystSpec& spec,
                               const LayoutPtr& catalyst_layout) {
  check_unit_interval(spec.inter_weight, "inter-sector weight R");
  check_unit_interval(spec.even_prob, "even-sector probability r1");
  check_unit_interval(spec.odd_prob, "odd-sector probability r2");
  CatalystSpec normalized = spec;
  normalized.even_phase = unit_phase(spec.even_phase, "even-sector phase");
  normalized.odd_phase = unit_phase(spec.odd_phase, "odd-sector phase");

  const CatalystFrame frame = catalyst_frame(catalyst_layout);
  return DensityOperator::make(frame.layout, frame.basis,
                               catalyst_matrix(frame, normalized));
}

DensityOperator wedge_density(const DensityOperator& rho,
                              const DensityOperator& tau,
                              const LayoutPtr& joint_layout) {
  const WedgePlan plan =
      make_wedge_plan(rho.basis(), tau.basis(), joint_layout);
  return apply_wedge_plan(plan, rho, tau);
}

CatalysisResult search_catalyst(const DensityOperator& rho,
                                const DensityOperator& sigma, SsrKind ssr,
                                const SearchOptions& options) {
  if (!(options.grid_step > 0.0 && options.grid_step <= 0.5))
    fail("search_catalyst: grid step must lie in (0, 0.5]");
  if (options.phase_divisions < 1)
    fail("search_catalyst: phase divisions must be >= 1");
  if (!rho.layout().equivalent(sigma.layout()) || rho.dim() != sigma.dim())
    fail("search_catalyst: states live on different layouts");
  for (std::size_t i = 0; i < rho.dim(); ++i)
    if (!(rho.basis()[i] == sigma.basis()[i]))
      fail("search_catalyst: states use different bases");

  const LayoutPtr catalyst_layout = primed_layout(rho.layout());
  const CatalystFrame frame = catalyst_frame(catalyst_layout);
  const LayoutPtr joint =
      compose_layouts(rho.layout_ptr(), catalyst_layout);
  const WedgePlan plan = make_wedge_plan(rho.basis(), *frame.basis, joint);

  std::vector<Complex> phases;
  for (int k = 0; k < options.phase_divisions; ++k) {
    const double angle =
        2.0 * std::numbers::pi * k / options.phase_divisions;
    phases.emplace_back(std::cos(angle), std::sin(angle));
  }

  const std::vector<double> grid = lattice_values(options.grid_step);

  CatalysisResult result;
  for (double inter : grid)
    for (double even_prob : grid)
      for (double odd_prob : grid)
        for (const Complex& even_phase : phases)
          for (const Complex& odd_phase : phases) {
            const CatalystSpec spec{inter, even_prob, odd_prob, even_phase,
                                    odd_phase};
            const DensityOperator tau = DensityOperator::make(
                frame.layout, frame.basis, catalyst_matrix(frame, spec));
            const DensityOperator joint_rho =
                apply_wedge_plan(plan, rho, tau);
            const DensityOperator joint_sigma =
                apply_wedge_plan(plan, sigma, tau);
            TransformationReport report = decide(
                joint_rho, joint_sigma, ssr, options.majorization_tol);
            ++result.examined;
            if (report.verdict == Verdict::Possible) {
              result.found = true;
              result.catalyst = spec;
              result.joint_report = std::move(report);
              return result;
            }
            ++result.rejections[report.failing_step.value()];
          }
  return result;
}

}  // namespace ssrent
