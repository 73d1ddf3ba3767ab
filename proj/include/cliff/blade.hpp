#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cliff/signature.hpp"

namespace cliff {

// A basis blade is the product of distinct generators in ascending index
// order, identified by the bitmask of its factors. Any orientation sign is
// carried by the owning coefficient, never by the mask.
using BladeMask = std::uint32_t;

inline int grade(BladeMask m) { return std::popcount(m); }

// Canonical blade order: by grade, then lexicographically on the ascending
// index tuple. For equal-grade masks the tuples first differ at the lowest
// bit position where the masks differ, and the mask holding that index
// comes first.
inline bool blade_less(BladeMask a, BladeMask b) {
  const int ga = grade(a), gb = grade(b);
  if (ga != gb) return ga < gb;
  if (a == b) return false;
  const BladeMask low = (a ^ b) & (0u - (a ^ b));
  return (a & low) != 0;
}

// All 2^n masks in canonical order.
std::vector<BladeMask> canonical_blades(int n);

// Position of a mask in canonical_blades(n); the fixed coordinate indexing
// used by the regular representation and the row-reduction based ranks.
int canonical_index(BladeMask m, int n);

struct SignedBlade {
  BladeMask mask;
  int sign;  // -1, 0 or +1; 0 never occurs for non-degenerate metrics
};

// Product of two basis blades: mask is the symmetric difference, sign is the
// parity of the transpositions needed to interleave the factors times the
// metric of each repeated generator.
inline SignedBlade blade_product(BladeMask a, BladeMask b, const Signature& sig) {
  int sign = 1;
  // #(i in a, j in b : i > j) == sum over shifts of popcount((a >> k) & b)
  for (BladeMask t = a >> 1; t != 0; t >>= 1)
    if (std::popcount(t & b) & 1) sign = -sign;
  for (BladeMask rep = a & b; rep != 0; rep &= rep - 1)
    sign *= sig.metric(std::countr_zero(rep));
  return {a ^ b, sign};
}

}  // namespace cliff
