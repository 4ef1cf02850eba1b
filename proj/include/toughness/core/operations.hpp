#pragma once

#include "toughness/core/graph.hpp"

#include <cstddef>

namespace tough {

/// Copy of g without e; vertex indices are unchanged. Throws DomainError if e is not an edge.
Graph delete_edge(const Graph& g, Edge e);

/// Number of connected components of g - removed (0 when removed covers V(g)).
/// Bit-parallel flood fill; requires n <= 64.
std::size_t components_after_removal(const Graph& g, VertexMask removed);

/// Same count for graphs with n <= 64, computed from rows already split into masks.
/// This is the inner loop of every cutset kernel.
inline std::size_t count_components(const VertexMask* rows, VertexMask alive) {
  std::size_t count = 0;
  while (alive != 0) {
    VertexMask frontier = alive & (~alive + 1);
    VertexMask comp = frontier;
    while (frontier != 0) {
      VertexMask next = 0;
      VertexMask f = frontier;
      while (f != 0) {
        next |= rows[std::countr_zero(f)];
        f &= f - 1;
      }
      frontier = next & alive & ~comp;
      comp |= frontier;
    }
    alive &= ~comp;
    ++count;
  }
  return count;
}

/// Component count for any vertex count (union-find over edges).
std::size_t component_count(const Graph& g);

bool is_connected(const Graph& g);

/// True for K_n with n >= 0 (n = 0 and n = 1 count as complete).
bool is_complete(const Graph& g);

/// True iff removing e increases the number of components. Throws if e is not an edge.
bool is_bridge(const Graph& g, Edge e);

Graph complement(const Graph& g);

/// Subgraph induced by keep, relabeled to 0..popcount(keep)-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexMask keep);

}  // namespace tough
