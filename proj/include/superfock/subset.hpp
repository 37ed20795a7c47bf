// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

#include "superfock/types.hpp"

namespace superfock {

using Bits = std::uint32_t;

/// Largest supported number of modes or generators (dense storage 2^n).
inline constexpr int kMaxIndices = 16;

inline constexpr int popcount(Bits a) { return std::popcount(a); }

inline constexpr Bits full_set(int n) { return n >= 32 ? ~Bits(0) : (Bits(1) << n) - 1; }

/// Number of pairs (a, b) in A x B with a > b.
inline constexpr int tau(Bits a, Bits b) {
  int count = 0;
  while (b) {
    int x = std::countr_zero(b);
    b &= b - 1;
    count += popcount(a & ~((Bits(2) << x) - 1));
  }
  return count;
}

/// Sign of e_A ^ e_B relative to e_{A|B}; caller guarantees A & B == 0.
inline constexpr int wedge_sign(Bits a, Bits b) { return (tau(a, b) & 1) ? -1 : 1; }

/// (-1)^{n(n-1)/2}: sign from reversing a product of n odd factors.
inline constexpr int reversal_sign(int n) { return ((n * (n - 1) / 2) & 1) ? -1 : 1; }

/// Index set over modes (or generators) 1..n stored as a bitmask, mode k on bit k-1.
struct ModeSubset {
  Bits bits = 0;

  constexpr ModeSubset() = default;
  constexpr explicit ModeSubset(Bits b) : bits(b) {}
  constexpr ModeSubset(std::initializer_list<int> modes) {
    for (int m : modes) bits |= Bits(1) << (m - 1);
  }

  constexpr int size() const { return popcount(bits); }
  constexpr bool contains(int mode) const { return (bits >> (mode - 1)) & 1u; }
  constexpr bool disjoint(ModeSubset o) const { return (bits & o.bits) == 0; }
  friend constexpr ModeSubset operator|(ModeSubset a, ModeSubset b) { return ModeSubset(a.bits | b.bits); }
  friend constexpr bool operator==(ModeSubset a, ModeSubset b) = default;
};

inline constexpr int tau(ModeSubset a, ModeSubset b) { return tau(a.bits, b.bits); }

/// Exterior product of two dense amplitude arrays over subsets of n indices.
inline Vector exterior_product(const Vector& x, const Vector& y, int n) {
  const Bits full = full_set(n);
  Vector out = Vector::Zero(x.size());
  for (Bits a = 0; a <= full; ++a) {
    const Complex xa = x[a];
    if (xa == Complex(0)) continue;
    const Bits comp = full ^ a;
    for (Bits b = comp;; b = (b - 1) & comp) {
      const Complex yb = y[b];
      if (yb != Complex(0)) out[a | b] += Real(wedge_sign(a, b)) * xa * yb;
      if (b == 0) break;
    }
  }
  return out;
}

/// Entries multiplied by (-1)^{|A|(|A|-1)/2} and conjugated.
inline Vector reversed_conjugate(const Vector& x) {
  Vector out(x.size());
  for (Eigen::Index a = 0; a < x.size(); ++a)
    out[a] = Real(reversal_sign(popcount(Bits(a)))) * std::conj(x[a]);
  return out;
}

}  // namespace superfock
