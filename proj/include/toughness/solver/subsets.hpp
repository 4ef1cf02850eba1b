#pragma once

#include "toughness/core/graph.hpp"

#include <array>
#include <cstdint>

namespace tough::subsets {

// C(n, k) for 0 <= k <= n <= 64; C(64, 32) < 2^61, so every entry fits.
struct BinomialTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};

  constexpr BinomialTable() {
    for (std::size_t n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
    }
  }
};

inline constexpr BinomialTable kBinomial{};

inline std::uint64_t binomial(std::size_t n, std::size_t k) { return k > n ? 0 : kBinomial.c[n][k]; }

/// The k-subset with the given rank in colexicographic order, which for masks of
/// equal popcount is increasing numeric order.
inline VertexMask colex_unrank(std::uint64_t rank, std::size_t k, std::size_t n) {
  VertexMask mask = 0;
  std::size_t top = n;
  for (std::size_t i = k; i >= 1; --i) {
    std::size_t c = top - 1;
    while (binomial(c, i) > rank) --c;
    mask |= vertex_bit(static_cast<Vertex>(c));
    rank -= binomial(c, i);
    top = c;
  }
  return mask;
}

inline std::uint64_t colex_rank(VertexMask mask) {
  std::uint64_t rank = 0;
  std::size_t i = 1;
  while (mask != 0) {
    rank += binomial(static_cast<std::size_t>(std::countr_zero(mask)), i++);
    mask &= mask - 1;
  }
  return rank;
}

/// Next mask with the same popcount (Gosper). Undefined for mask == 0 and for the
/// last k-subset of a 64-bit universe.
inline VertexMask next_same_popcount(VertexMask mask) {
  const VertexMask low = mask & (~mask + 1);
  const VertexMask ripple = mask + low;
  return (((ripple ^ mask) >> 2) / low) | ripple;
}

}  // namespace tough::subsets
