// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#include "ssrent/fock.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ssrent {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("fock: " + msg);
}

}  // namespace

LayoutPtr ModeLayout::create(std::vector<Party> parties) {
  std::vector<std::string> canonical;
  for (const Party& p : parties)
    canonical.insert(canonical.end(), p.modes.begin(), p.modes.end());
  return create(std::move(parties), std::move(canonical));
}

LayoutPtr ModeLayout::create(std::vector<Party> parties,
                             std::vector<std::string> canonical_order) {
  if (parties.empty()) fail("layout needs at least one party");
  if (parties.size() > 8) fail("at most 8 parties supported");

  auto layout = std::shared_ptr<ModeLayout>(new ModeLayout());
  layout->parties_ = std::move(parties);
  layout->canonical_ = std::move(canonical_order);

  if (layout->canonical_.size() > 64) fail("at most 64 modes supported");

  std::set<std::string> party_labels;
  std::set<std::string> all_modes;
  std::size_t mode_total = 0;
  for (const Party& p : layout->parties_) {
    if (!party_labels.insert(p.label).second)
      fail("duplicate party label '" + p.label + "'");
    for (const std::string& m : p.modes) {
      if (!all_modes.insert(m).second) fail("duplicate mode label '" + m + "'");
      ++mode_total;
    }
  }
  if (mode_total != layout->canonical_.size())
    fail("canonical order must list every mode exactly once");
  for (std::size_t i = 0; i < layout->canonical_.size(); ++i) {
    if (!all_modes.count(layout->canonical_[i]))
      fail("canonical order has unknown mode '" + layout->canonical_[i] + "'");
    if (!layout->canonical_index_.emplace(layout->canonical_[i], i).second)
      fail("canonical order repeats mode '" + layout->canonical_[i] + "'");
  }

  layout->spin_.assign(layout->canonical_.size(), 0);
  for (const Party& p : layout->parties_) {
    std::uint64_t mask = 0;
    std::vector<std::size_t> positions;
    positions.reserve(p.modes.size());
    for (std::size_t k = 0; k < p.modes.size(); ++k) {
      const std::size_t pos = layout->canonical_index_.at(p.modes[k]);
      mask |= std::uint64_t{1} << pos;
      positions.push_back(pos);
      layout->spin_[pos] = (k % 2 == 0) ? +1 : -1;
    }
    layout->party_masks_.push_back(mask);
    layout->party_positions_.push_back(std::move(positions));
  }
  return layout;
}

std::size_t ModeLayout::canonical_index(std::string_view mode) const {
  auto it = canonical_index_.find(mode);
  if (it == canonical_index_.end())
    fail("unknown mode '" + std::string(mode) + "'");
  return it->second;
}

bool ModeLayout::has_mode(std::string_view mode) const noexcept {
  return canonical_index_.find(mode) != canonical_index_.end();
}

std::size_t ModeLayout::party_index(std::string_view label) const {
  for (std::size_t i = 0; i < parties_.size(); ++i)
    if (parties_[i].label == label) return i;
  fail("unknown party '" + std::string(label) + "'");
}

std::optional<std::size_t> ModeLayout::orbitals_per_party() const {
  const std::size_t m = parties_.front().modes.size();
  if (m == 0 || m % 2 != 0) return std::nullopt;
  for (const Party& p : parties_)
    if (p.modes.size() != m) return std::nullopt;
  return m / 2;
}

bool ModeLayout::equivalent(const ModeLayout& other) const {
  if (canonical_ != other.canonical_) return false;
  if (parties_.size() != other.parties_.size()) return false;
  for (std::size_t i = 0; i < parties_.size(); ++i) {
    if (parties_[i].label != other.parties_[i].label) return false;
    if (parties_[i].modes != other.parties_[i].modes) return false;
  }
  return true;
}

LayoutPtr two_orbital_layout() {
  static const LayoutPtr layout = ModeLayout::create(
      {{"A", {"Au", "Ad"}}, {"B", {"Bu", "Bd"}}});
  return layout;
}

LayoutPtr primed_layout(const ModeLayout& base) {
  std::vector<Party> parties = base.parties();
  for (Party& p : parties)
    for (std::string& m : p.modes) m += '\'';
  std::vector<std::string> canonical = base.canonical_order();
  for (std::string& m : canonical) m += '\'';
  return ModeLayout::create(std::move(parties), std::move(canonical));
}

LayoutPtr compose_layouts(const LayoutPtr& system, const LayoutPtr& catalyst) {
  if (!system || !catalyst) fail("compose_layouts: null layout");
  if (system->party_count() != catalyst->party_count())
    fail("compose_layouts: party count mismatch");
  std::vector<Party> parties;
  for (std::size_t i = 0; i < system->party_count(); ++i) {
    const Party& s = system->parties()[i];
    const Party& c = catalyst->parties()[i];
    if (s.label != c.label)
      fail("compose_layouts: party label mismatch '" + s.label + "' vs '" +
           c.label + "'");
    Party joint{s.label, s.modes};
    joint.modes.insert(joint.modes.end(), c.modes.begin(), c.modes.end());
    parties.push_back(std::move(joint));
  }
  return ModeLayout::create(std::move(parties));
}

OccupationState::OccupationState(std::uint64_t bits, const LayoutPtr& layout)
    : OccupationState(bits, *layout) {}

OccupationState::OccupationState(std::uint64_t bits, const ModeLayout& layout)
    : bits_(bits), layout_(&layout) {
  const std::size_t n = layout.mode_count();
  if (n < 64 && (bits >> n) != 0)
    fail("occupation bits exceed the layout's mode count");
}

int OccupationState::total_number() const {
  return std::popcount(bits_);
}

int OccupationState::local_number(std::size_t party) const {
  return std::popcount(bits_ & layout_->party_mask(party));
}

int OccupationState::net_spin() const {
  int s = 0;
  for (std::size_t i = 0; i < layout_->mode_count(); ++i)
    if (occupied(i)) s += layout_->spin_sign(i);
  return s;
}

std::uint64_t OccupationState::lex_key() const {
  const std::size_t n = layout_->mode_count();
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (occupied(i)) key |= std::uint64_t{1} << (n - 1 - i);
  return key;
}

std::string OccupationState::str() const {
  const auto orbitals = layout_->orbitals_per_party();
  if (!orbitals)
    fail("occupation string form needs an even, equal mode count per party");
  std::string out;
  for (std::size_t f = 0; f < *orbitals; ++f) {
    if (f) out += ';';
    for (std::size_t p = 0; p < layout_->party_count(); ++p) {
      if (p) out += ',';
      const auto& pos = layout_->party_positions(p);
      out += occupied(pos[2 * f]) ? '1' : '0';
      out += occupied(pos[2 * f + 1]) ? '1' : '0';
    }
  }
  return out;
}

OccupationState occupation_from_string(std::string_view text,
                                       const LayoutPtr& layout) {
  const auto orbitals = layout->orbitals_per_party();
  if (!orbitals)
    fail("occupation string form needs an even, equal mode count per party");

  std::vector<std::string_view> factors;
  for (std::size_t start = 0; start <= text.size();) {
    const std::size_t semi = text.find(';', start);
    factors.push_back(text.substr(
        start, semi == std::string_view::npos ? text.size() - start
                                              : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (factors.size() != *orbitals)
    fail("occupation string '" + std::string(text) + "': expected " +
         std::to_string(*orbitals) + " ';'-separated factor(s)");

  std::uint64_t bits = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    std::vector<std::string_view> groups;
    const std::string_view fac = factors[f];
    for (std::size_t start = 0; start <= fac.size();) {
      const std::size_t comma = fac.find(',', start);
      groups.push_back(fac.substr(
          start, comma == std::string_view::npos ? fac.size() - start
                                                 : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (groups.size() != layout->party_count())
      fail("occupation string '" + std::string(text) + "': expected " +
           std::to_string(layout->party_count()) + " orbital group(s)");
    for (std::size_t p = 0; p < groups.size(); ++p) {
      if (groups[p].size() != 2)
        fail("occupation string '" + std::string(text) +
             "': orbital groups are two characters");
      const auto& pos = layout->party_positions(p);
      for (std::size_t s = 0; s < 2; ++s) {
        const char c = groups[p][s];
        if (c != '0' && c != '1')
          fail("occupation string '" + std::string(text) +
               "': occupations are '0' or '1'");
        if (c == '1') bits |= std::uint64_t{1} << pos[2 * f + s];
      }
    }
  }
  return OccupationState(bits, layout);
}

std::vector<OccupationState> enumerate_basis(const LayoutPtr& layout,
                                             const BasisFilter& filter) {
  const std::size_t n = layout->mode_count();
  if (n > 24) fail("enumerate_basis: refusing to enumerate more than 2^24 kets");

  std::vector<OccupationState> out;
  // Iterating lex keys in increasing order yields lexicographic bit-vector
  // order directly (position 0 is the most significant digit of the key).
  for (std::uint64_t key = 0; key < (std::uint64_t{1} << n); ++key) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((key >> (n - 1 - i)) & 1u) bits |= std::uint64_t{1} << i;
    OccupationState state(bits, *layout);
    if (filter.total_number && state.total_number() != *filter.total_number)
      continue;
    if (filter.total_parity && state.total_parity() != *filter.total_parity)
      continue;
    if (filter.net_spin && state.net_spin() != *filter.net_spin) continue;
    out.push_back(state);
  }
  return out;
}

namespace {

// Parity of the permutation sorting `seq` ascending, by inversion count.
int inversion_sign(std::span<const std::size_t> seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return (inversions % 2 == 0) ? +1 : -1;
}

}  // namespace

int reorder_sign(const OccupationState& occ,
                 std::span<const std::string> from_order,
                 std::span<const std::string> to_order) {
  if (from_order.size() != to_order.size())
    fail("reorder_sign: orders differ in length");
  std::map<std::string_view, std::size_t> to_pos;
  for (std::size_t i = 0; i < to_order.size(); ++i)
    if (!to_pos.emplace(to_order[i], i).second)
      fail("reorder_sign: duplicate mode in target order");

  const ModeLayout& layout = occ.layout();
  if (from_order.size() != layout.mode_count())
    fail("reorder_sign: orders must cover the layout's modes");

  // Occupied modes in from_order sequence, written as target positions; the
  // permutation parity restricted to occupied modes is the inversion parity.
  std::vector<std::size_t> target_positions;
  std::set<std::string_view> seen;
  for (const std::string& mode : from_order) {
    if (!seen.insert(mode).second)
      fail("reorder_sign: duplicate mode in source order");
    auto it = to_pos.find(mode);
    if (it == to_pos.end())
      fail("reorder_sign: orders are over different mode sets");
    if (occ.occupied(layout.canonical_index(mode)))
      target_positions.push_back(it->second);
  }
  return inversion_sign(target_positions);
}

SignedState wedge_state(const OccupationState& a, const OccupationState& b,
                        const LayoutPtr& joint_layout) {
  const ModeLayout& la = a.layout();
  const ModeLayout& lb = b.layout();
  if (la.mode_count() + lb.mode_count() != joint_layout->mode_count())
    fail("wedge_state: joint layout must cover exactly the union of modes");
  for (const std::string& m : la.canonical_order())
    if (lb.has_mode(m)) fail("wedge_state: factors share mode '" + m + "'");

  // Creation string: a's occupied modes in a's canonical order, then b's.
  // Re-sorting that string into the joint canonical order costs one sign
  // flip per crossing of two occupied modes.
  std::vector<std::size_t> joint_positions;
  std::uint64_t bits = 0;
  for (const OccupationState* part : {&a, &b}) {
    const ModeLayout& lp = part->layout();
    for (std::size_t i = 0; i < lp.mode_count(); ++i) {
      if (!part->occupied(i)) continue;
      const std::size_t pos = joint_layout->canonical_index(
          lp.canonical_order()[i]);
      joint_positions.push_back(pos);
      bits |= std::uint64_t{1} << pos;
    }
  }
  return SignedState{OccupationState(bits, joint_layout),
                     inversion_sign(joint_positions)};
}

}  // namespace ssrent
