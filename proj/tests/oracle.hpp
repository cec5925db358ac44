// Copyright 2026 The ssr-ent Authors
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force second-quantization oracle used by the tests. Everything here
// is derived from one primitive: applying a single creation or annihilation
// operator to a basis ket while counting the occupied modes it crosses.
// The library under test never computes signs this way (it counts
// permutation inversions and contracts index blocks), so agreement is a real
// cross-check.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ssrent/cmatrix.hpp"

namespace oracle {

/// A full-Fock basis ket (bit i = canonical mode i) with an accumulated
/// sign; `zero` marks an annihilated (vanished) result.
struct Ket {
  std::uint64_t bits = 0;
  int sign = +1;
  bool zero = false;
};

inline Ket vacuum() { return {}; }

inline int crossings_below(std::uint64_t bits, int mode) {
  return std::popcount(bits & ((std::uint64_t{1} << mode) - 1));
}

inline Ket apply_annihilation(Ket k, int mode) {
  if (k.zero) return k;
  if (((k.bits >> mode) & 1u) == 0) return {0, +1, true};
  if (crossings_below(k.bits, mode) % 2 != 0) k.sign = -k.sign;
  k.bits &= ~(std::uint64_t{1} << mode);
  return k;
}

inline Ket apply_creation(Ket k, int mode) {
  if (k.zero) return k;
  if ((k.bits >> mode) & 1u) return {0, +1, true};
  if (crossings_below(k.bits, mode) % 2 != 0) k.sign = -k.sign;
  k.bits |= std::uint64_t{1} << mode;
  return k;
}

/// Ket c+_{m1} c+_{m2} ... c+_{mk} |0> for the sequence (m1, ..., mk); the
/// rightmost operator acts first.
inline Ket build_state(std::span<const int> creation_sequence) {
  Ket k = vacuum();
  for (auto it = creation_sequence.rbegin(); it != creation_sequence.rend();
       ++it)
    k = apply_creation(k, *it);
  return k;
}

/// Fermionic partial trace onto the modes listed in `keep` (canonical
/// positions), computed by embedding |m><n| as the operator string
/// C(m) P_vac A(n) and walking it ket by ket. Returns the reduced matrix
/// over the distinct kept-occupation patterns, sorted lexicographically
/// (kept position order), together with those patterns (full-width bits).
struct ReducedMatrix {
  std::vector<std::uint64_t> kept_patterns;  // bits at original positions
  ssrent::CMatrix matrix;
};

inline ReducedMatrix partial_trace(const ssrent::CMatrix& m,
                                   std::span<const std::uint64_t> basis_bits,
                                   std::size_t mode_count,
                                   std::span<const std::size_t> keep) {
  std::uint64_t keep_mask = 0;
  for (std::size_t pos : keep) keep_mask |= std::uint64_t{1} << pos;
  const std::uint64_t traced_mask = ~keep_mask;

  // Lexicographic key over kept positions in canonical order.
  std::vector<std::size_t> kept_sorted(keep.begin(), keep.end());
  std::sort(kept_sorted.begin(), kept_sorted.end());
  auto lex_key = [&](std::uint64_t full_bits) {
    std::uint64_t key = 0;
    for (std::size_t r = 0; r < kept_sorted.size(); ++r)
      if ((full_bits >> kept_sorted[r]) & 1u)
        key |= std::uint64_t{1} << (kept_sorted.size() - 1 - r);
    return key;
  };

  std::vector<std::uint64_t> patterns;
  for (std::uint64_t b : basis_bits) patterns.push_back(b & keep_mask);
  std::sort(patterns.begin(), patterns.end(),
            [&](std::uint64_t a, std::uint64_t b) {
              return lex_key(a) < lex_key(b);
            });
  patterns.erase(std::unique(patterns.begin(), patterns.end()),
                 patterns.end());
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < patterns.size(); ++i)
    index.emplace(patterns[i], i);

  ssrent::CMatrix out(patterns.size());
  for (std::size_t fi = 0; fi < basis_bits.size(); ++fi) {
    for (std::size_t gi = 0; gi < basis_bits.size(); ++gi) {
      const std::uint64_t f = basis_bits[fi];
      const std::uint64_t g = basis_bits[gi];
      if ((f & traced_mask) != (g & traced_mask)) continue;

      // A(n): annihilate f's kept modes in ascending order.
      Ket k{f, +1, false};
      for (std::size_t i = 0; i < mode_count; ++i)
        if ((f >> i) & (keep_mask >> i) & 1u)
          k = apply_annihilation(k, static_cast<int>(i));
      // C(m): create g's kept modes in descending order.
      for (std::size_t i = mode_count; i-- > 0;)
        if ((g >> i) & (keep_mask >> i) & 1u)
          k = apply_creation(k, static_cast<int>(i));
      if (k.zero || k.bits != g) continue;  // cannot happen for valid input

      out(index.at(f & keep_mask), index.at(g & keep_mask)) +=
          static_cast<double>(k.sign) * m(fi, gi);
    }
  }
  return {std::move(patterns), std::move(out)};
}

}  // namespace oracle
