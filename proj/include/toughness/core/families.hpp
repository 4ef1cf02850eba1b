#pragma once

#include "toughness/core/graph.hpp"

#include <cstddef>

// Named graphs used throughout the tests, the CLI and the sweeps.
namespace tough::families {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
/// Path on n vertices: 0-1-...-(n-1).
Graph path(std::size_t n);
/// Cycle on n >= 3 vertices: 0-1-...-(n-1)-0.
Graph cycle(std::size_t n);
/// K_{1,leaves}: center 0, leaves 1..leaves.
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t left, std::size_t right);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i--i+5.
Graph petersen();

}  // namespace tough::families
