// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssrent {

class ModeLayout;
using LayoutPtr = std::shared_ptr<const ModeLayout>;

/// One party of the bipartition and the fermionic modes it holds, listed in
/// canonical order. Modes come in (up, down) pairs forming orbitals.
struct Party {
  std::string label;
  std::vector<std::string> modes;
};

/// Assignment of uniquely named fermionic modes to parties, together with the
/// global canonical mode order that fixes the sign convention of every
/// creation-operator string in this library.
///
/// By default the canonical order concatenates the parties' mode lists
/// (all of A's modes, then all of B's), which keeps each party's block
/// contiguous and makes partial traces plain block contractions. Joint
/// system+catalyst layouts keep each party's system modes before its
/// catalyst modes.
///
/// Layouts are immutable once created and are passed around by shared
/// pointer; OccupationState keeps a non-owning pointer, so the layout must
/// outlive the states built over it.
class ModeLayout {
 public:
  static LayoutPtr create(std::vector<Party> parties);
  static LayoutPtr create(std::vector<Party> parties,
                          std::vector<std::string> canonical_order);

  std::size_t mode_count() const noexcept { return canonical_.size(); }
  std::size_t party_count() const noexcept { return parties_.size(); }
  const std::vector<Party>& parties() const noexcept { return parties_; }
  const std::vector<std::string>& canonical_order() const noexcept {
    return canonical_;
  }

  /// Canonical position of a mode label; throws on unknown label.
  std::size_t canonical_index(std::string_view mode) const;
  bool has_mode(std::string_view mode) const noexcept;
  /// Index of a party by label; throws on unknown label.
  std::size_t party_index(std::string_view label) const;

  /// Bit mask over canonical positions belonging to the given party.
  std::uint64_t party_mask(std::size_t party) const {
    return party_masks_.at(party);
  }
  /// Canonical positions of the party's modes, in the party's own list order.
  const std::vector<std::size_t>& party_positions(std::size_t party) const {
    return party_positions_.at(party);
  }
  /// +1 for the first mode of each orbital pair (spin up), -1 for the second.
  int spin_sign(std::size_t canonical_pos) const {
    return spin_.at(canonical_pos);
  }

  /// Modes per party divided by two when every party has the same even mode
  /// count (the layouts the "00,11[;...]" string grammar covers); nullopt
  /// otherwise.
  std::optional<std::size_t> orbitals_per_party() const;

  /// Structural equality: same parties, same modes, same canonical order.
  bool equivalent(const ModeLayout& other) const;

 private:
  ModeLayout() = default;

  std::vector<Party> parties_;
  std::vector<std::string> canonical_;
  std::map<std::string, std::size_t, std::less<>> canonical_index_;
  std::vector<std::uint64_t> party_masks_;
  std::vector<std::vector<std::size_t>> party_positions_;
  std::vector<int> spin_;
};

/// The paper's two-orbital system: A = (Au, Ad), B = (Bu, Bd).
LayoutPtr two_orbital_layout();
/// Same shape as `base` with every mode label primed (catalyst copies).
LayoutPtr primed_layout(const ModeLayout& base);
/// Joint layout for system wedge catalyst: party labels must match pairwise;
/// each joint party lists the system modes before the catalyst modes.
LayoutPtr compose_layouts(const LayoutPtr& system, const LayoutPtr& catalyst);

/// An n-mode fermionic basis ket |n_0 n_1 ... n_{k-1}> as occupation bits in
/// canonical order (bit i = mode i occupied). The ket is the creation string
/// applied in ascending canonical order to the vacuum.
class OccupationState {
 public:
  OccupationState() = default;
  OccupationState(std::uint64_t bits, const LayoutPtr& layout);
  OccupationState(std::uint64_t bits, const ModeLayout& layout);

  std::uint64_t bits() const noexcept { return bits_; }
  const ModeLayout& layout() const { return *layout_; }
  bool occupied(std::size_t canonical_pos) const {
    return (bits_ >> canonical_pos) & 1u;
  }

  int total_number() const;
  int total_parity() const { return total_number() & 1; }
  int local_number(std::size_t party) const;
  int local_parity(std::size_t party) const { return local_number(party) & 1; }
  /// n_up - n_down over all modes.
  int net_spin() const;

  /// Sort key reproducing lexicographic order on the occupation bit-vector
  /// (canonical position 0 is the most significant digit).
  std::uint64_t lex_key() const;

  /// Occupation-string form, e.g. "00,11" or "00,11;01,10" for joint states.
  std::string str() const;

  friend bool operator==(const OccupationState& a, const OccupationState& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  const ModeLayout* layout_ = nullptr;
};

using Basis = std::vector<OccupationState>;
using BasisPtr = std::shared_ptr<const Basis>;

/// Occupation ket together with the +-1 phase picked up by reordering its
/// creation operators.
struct SignedState {
  OccupationState state;
  int sign = +1;
};

/// Optional filters for enumerate_basis. All present constraints must hold.
struct BasisFilter {
  std::optional<int> total_number;
  std::optional<int> total_parity;  ///< 0 even, 1 odd
  std::optional<int> net_spin;      ///< n_up - n_down
};

/// All occupation states of the layout satisfying the filter, in
/// lexicographic bit-vector order. Deterministic; empty if unsatisfiable.
std::vector<OccupationState> enumerate_basis(const LayoutPtr& layout,
                                             const BasisFilter& filter = {});

/// Sign picked up when the creation-operator string of `occ`, written in
/// `from_order`, is re-sorted into `to_order`: the parity of the permutation
/// restricted to occupied modes. Both orders must be permutations of the
/// same mode set covering the state's layout.
int reorder_sign(const OccupationState& occ,
                 std::span<const std::string> from_order,
                 std::span<const std::string> to_order);

/// Fermionic wedge product of two kets over disjoint mode sets: concatenates
/// the two creation strings (a's modes first) and re-sorts into the joint
/// canonical order, accumulating the anticommutation sign.
SignedState wedge_state(const OccupationState& a, const OccupationState& b,
                        const LayoutPtr& joint_layout);

/// Parses the "00,11" / "00,00;11,11" grammar: ';' separates wedge factors,
/// ',' separates the parties' orbitals inside a factor, and each orbital is
/// two characters (up then down). Factor f's orbital for party p maps to the
/// party's modes [2f, 2f+1].
OccupationState occupation_from_string(std::string_view text,
                                       const LayoutPtr& layout);

}  // namespace ssrent
