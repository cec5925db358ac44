// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <random>

#include "ssrent/fock.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace ssrent;

namespace {

BasisFilter filter_n(int n) {
  BasisFilter f;
  f.total_number = n;
  return f;
}

std::vector<std::string> shuffled_order(const ModeLayout& layout,
                                        std::mt19937_64& rng) {
  std::vector<std::string> order = layout.canonical_order();
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// Oracle sign of `occ` written in `order` relative to canonical order.
int oracle_build_sign(const OccupationState& occ,
                      std::span<const std::string> order) {
  std::vector<int> seq;
  for (const std::string& mode : order) {
    const std::size_t pos = occ.layout().canonical_index(mode);
    if (occ.occupied(pos)) seq.push_back(static_cast<int>(pos));
  }
  const oracle::Ket k = oracle::build_state(seq);
  REQUIRE(!k.zero);
  REQUIRE(k.bits == occ.bits());
  return k.sign;
}

}  // namespace

TEST_CASE("two-orbital enumeration reproduces the four two-particle kets") {
  BasisFilter f;
  f.total_number = 2;
  f.net_spin = 0;
  f.total_parity = 0;
  const auto basis = enumerate_basis(two_orbital_layout(), f);
  REQUIRE(basis.size() == 4);
  CHECK(basis[0].str() == "00,11");
  CHECK(basis[1].str() == "01,10");
  CHECK(basis[2].str() == "10,01");
  CHECK(basis[3].str() == "11,00");
  for (const OccupationState& s : basis) {
    CHECK(s.total_number() == 2);
    CHECK(s.net_spin() == 0);
  }
}

TEST_CASE("unconstrained two-mode enumeration is lexicographic") {
  const LayoutPtr layout = ModeLayout::create({{"A", {"m0", "m1"}}});
  const auto basis = enumerate_basis(layout);
  REQUIRE(basis.size() == 4);
  // |00>, |01>, |10>, |11> with the first mode as the leading digit.
  CHECK(basis[0].bits() == 0b00);
  CHECK(basis[1].bits() == 0b10);  // second mode occupied
  CHECK(basis[2].bits() == 0b01);
  CHECK(basis[3].bits() == 0b11);
}

TEST_CASE("eight-mode half-filled counts match brute-force bit enumeration") {
  const LayoutPtr joint = compose_layouts(two_orbital_layout(),
                                          primed_layout(*two_orbital_layout()));
  REQUIRE(joint->mode_count() == 8);

  std::size_t weight4 = 0;
  for (unsigned bits = 0; bits < 256; ++bits) {
    int n = 0;
    for (int i = 0; i < 8; ++i) n += (bits >> i) & 1u;
    if (n == 4) ++weight4;
  }
  CHECK(enumerate_basis(joint, filter_n(4)).size() == weight4);  // C(8,4)

  // Spin filter: independent count via the layout's up/down assignment.
  BasisFilter f = filter_n(4);
  f.net_spin = 0;
  std::size_t balanced = 0;
  for (unsigned bits = 0; bits < 256; ++bits) {
    int n = 0, spin = 0;
    for (int i = 0; i < 8; ++i)
      if ((bits >> i) & 1u) {
        ++n;
        spin += joint->spin_sign(i);
      }
    if (n == 4 && spin == 0) ++balanced;
  }
  CHECK(enumerate_basis(joint, f).size() == balanced);

  // Even parity is implied at fixed even particle number.
  f.total_parity = 0;
  CHECK(enumerate_basis(joint, f).size() == balanced);
}

TEST_CASE("reorder_sign handles the two-mode transpositions") {
  const LayoutPtr layout = ModeLayout::create({{"A", {"m0", "m1"}}});
  const std::vector<std::string> fwd = {"m0", "m1"};
  const std::vector<std::string> rev = {"m1", "m0"};

  const OccupationState both(0b11, layout);
  CHECK(reorder_sign(both, fwd, rev) == -1);
  CHECK(reorder_sign(both, fwd, fwd) == +1);

  const OccupationState one(0b01, layout);
  CHECK(reorder_sign(one, fwd, rev) == +1);  // a single mode never crosses
  const OccupationState none(0b00, layout);
  CHECK(reorder_sign(none, fwd, rev) == +1);
}

TEST_CASE("reorder_sign matches the operator-string oracle") {
  const LayoutPtr layout = two_orbital_layout();
  std::mt19937_64 rng(test_seed());

  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const OccupationState occ(bits, layout);
    for (int trial = 0; trial < 8; ++trial) {
      const auto from = shuffled_order(*layout, rng);
      const auto to = shuffled_order(*layout, rng);
      const int expected =
          oracle_build_sign(occ, from) * oracle_build_sign(occ, to);
      CHECK(reorder_sign(occ, from, to) == expected);
    }
  }
}

TEST_CASE("reorder_sign composes along chains of orders") {
  const LayoutPtr layout = two_orbital_layout();
  std::mt19937_64 rng(test_seed() ^ 0x5eedULL);
  for (int trial = 0; trial < 32; ++trial) {
    const OccupationState occ(rng() % 16, layout);
    const auto o1 = shuffled_order(*layout, rng);
    const auto o2 = shuffled_order(*layout, rng);
    const auto o3 = shuffled_order(*layout, rng);
    CHECK(reorder_sign(occ, o1, o2) * reorder_sign(occ, o2, o3) ==
          reorder_sign(occ, o1, o3));
  }
}

TEST_CASE("reorder_sign rejects mismatched mode sets") {
  const LayoutPtr layout = ModeLayout::create({{"A", {"m0", "m1"}}});
  const OccupationState occ(0b01, layout);
  const std::vector<std::string> good = {"m0", "m1"};
  const std::vector<std::string> bad = {"m0", "mX"};
  CHECK_THROWS_AS(reorder_sign(occ, good, bad), std::invalid_argument);
}

TEST_CASE("wedge_state against the anticommutation oracle, exhaustively") {
  const LayoutPtr system = two_orbital_layout();
  const LayoutPtr catalyst = primed_layout(*system);
  const LayoutPtr joint = compose_layouts(system, catalyst);

  for (std::uint64_t a_bits = 0; a_bits < 16; ++a_bits) {
    for (std::uint64_t b_bits = 0; b_bits < 16; ++b_bits) {
      const OccupationState a(a_bits, system);
      const OccupationState b(b_bits, catalyst);
      const SignedState w = wedge_state(a, b, joint);

      // Creation sequence in joint positions: a's modes then b's modes.
      std::vector<int> seq;
      for (std::size_t i = 0; i < 4; ++i)
        if (a.occupied(i))
          seq.push_back(static_cast<int>(
              joint->canonical_index(system->canonical_order()[i])));
      for (std::size_t i = 0; i < 4; ++i)
        if (b.occupied(i))
          seq.push_back(static_cast<int>(
              joint->canonical_index(catalyst->canonical_order()[i])));
      const oracle::Ket k = oracle::build_state(seq);
      REQUIRE(!k.zero);
      CHECK(w.state.bits() == k.bits);
      CHECK(w.sign == k.sign);

      // Local quantum numbers add over the factors.
      for (std::size_t p = 0; p < 2; ++p)
        CHECK(w.state.local_number(p) ==
              a.local_number(p) + b.local_number(p));
    }
  }
}

TEST_CASE("wedge of specific kets") {
  const LayoutPtr system = two_orbital_layout();
  const LayoutPtr catalyst = primed_layout(*system);
  const LayoutPtr joint = compose_layouts(system, catalyst);

  const OccupationState a = occupation_from_string("00,11", system);
  const OccupationState b = occupation_from_string("01,10", catalyst);
  const SignedState w = wedge_state(a, b, joint);
  CHECK(w.state.str() == "00,11;01,10");

  SUBCASE("vacuum factor never crosses anything") {
    const OccupationState vac(0, system);
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
      const SignedState v =
          wedge_state(vac, OccupationState(bits, catalyst), joint);
      CHECK(v.sign == +1);
      CHECK(v.state.local_number(0) ==
            OccupationState(bits, catalyst).local_number(0));
    }
  }

  SUBCASE("particle number is additive") {
    const OccupationState x = occupation_from_string("11,00", system);
    const OccupationState y = occupation_from_string("11,00", catalyst);
    const SignedState v = wedge_state(x, y, joint);
    CHECK(v.state.total_number() == 4);
    CHECK(v.state.str() == "11,00;11,00");
  }

  SUBCASE("overlapping mode sets are rejected") {
    const OccupationState x(0b0011, system);
    const OccupationState y(0b0011, system);
    CHECK_THROWS_AS(wedge_state(x, y, joint), std::invalid_argument);
  }
}

TEST_CASE("wedge_state is associative in occupations and sign") {
  const LayoutPtr l1 = ModeLayout::create({{"A", {"a1"}}, {"B", {"b1"}}});
  const LayoutPtr l2 = ModeLayout::create({{"A", {"a2"}}, {"B", {"b2"}}});
  const LayoutPtr l3 = ModeLayout::create({{"A", {"a3"}}, {"B", {"b3"}}});
  const LayoutPtr l12 = compose_layouts(l1, l2);
  const LayoutPtr l23 = compose_layouts(l2, l3);
  const LayoutPtr l123 = compose_layouts(l12, l3);
  const LayoutPtr l123b = compose_layouts(l1, l23);
  REQUIRE(l123->equivalent(*l123b));

  for (std::uint64_t x = 0; x < 4; ++x)
    for (std::uint64_t y = 0; y < 4; ++y)
      for (std::uint64_t z = 0; z < 4; ++z) {
        const OccupationState a(x, l1), b(y, l2), c(z, l3);
        const SignedState ab = wedge_state(a, b, l12);
        const SignedState abc_left = wedge_state(ab.state, c, l123);
        const SignedState bc = wedge_state(b, c, l23);
        const SignedState abc_right = wedge_state(a, bc.state, l123b);
        CHECK(abc_left.state.bits() == abc_right.state.bits());
        CHECK(ab.sign * abc_left.sign == bc.sign * abc_right.sign);
      }
}

TEST_CASE("occupation strings round-trip on system and joint layouts") {
  const LayoutPtr system = two_orbital_layout();
  const LayoutPtr joint = compose_layouts(system, primed_layout(*system));

  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const OccupationState s(bits, system);
    CHECK(occupation_from_string(s.str(), system) == s);
  }
  std::mt19937_64 rng(test_seed() ^ 0xabcdULL);
  for (int trial = 0; trial < 64; ++trial) {
    const OccupationState s(rng() % 256, joint);
    CHECK(occupation_from_string(s.str(), joint) == s);
  }

  CHECK(occupation_from_string("00,11", system).bits() == 0b1100);
  CHECK_THROWS_AS(occupation_from_string("00,1", system),
                  std::invalid_argument);
  CHECK_THROWS_AS(occupation_from_string("00,12", system),
                  std::invalid_argument);
  CHECK_THROWS_AS(occupation_from_string("00,11;00,11", system),
                  std::invalid_argument);
  CHECK_THROWS_AS(occupation_from_string("00", system),
                  std::invalid_argument);
}

TEST_CASE("layout validation") {
  CHECK_THROWS_AS(ModeLayout::create({{"A", {"m", "m"}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ModeLayout::create({{"A", {"m"}}, {"A", {"n"}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ModeLayout::create({{"A", {"m", "n"}}}, {"m", "m"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ModeLayout::create({}), std::invalid_argument);

  const LayoutPtr layout = two_orbital_layout();
  CHECK(layout->party_index("B") == 1);
  CHECK_THROWS_AS(layout->party_index("C"), std::invalid_argument);
  CHECK(layout->party_mask(0) == 0b0011);
  CHECK(layout->party_mask(1) == 0b1100);
}
