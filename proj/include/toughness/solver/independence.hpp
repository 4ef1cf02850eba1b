#pragma once

#include "toughness/core/graph.hpp"

#include <cstddef>

namespace tough {

struct IndependenceResult {
  std::size_t alpha = 0;
  /// A maximum independent set.
  VertexMask witness = 0;
};

/// Exact α(g) by branch and bound: branch on a highest-degree vertex
/// (take it / drop it), bound with a greedy clique cover of the candidates.
/// Requires n <= 64.
IndependenceResult independence_number(const Graph& g);

bool is_independent(const Graph& g, VertexMask set);

namespace reference {

inline constexpr std::size_t kIndependenceOracleCap = 30;

/// Scans every subset; the testing oracle for independence_number.
IndependenceResult independence_number_exhaustive(const Graph& g);

}  // namespace reference
}  // namespace tough
