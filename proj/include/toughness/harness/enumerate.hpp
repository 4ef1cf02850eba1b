#pragma once

#include "toughness/core/graph.hpp"

#include <cstdint>
#include <vector>

namespace tough {

inline constexpr std::size_t kEnumerationMax = 8;
inline constexpr std::size_t kCanonicalMax = 11;

/// Upper-triangle adjacency bits in graph6 column order, first pair most significant.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Largest adjacency_code over all relabelings that list vertices by
/// non-increasing degree. Two graphs are isomorphic iff their codes agree.
/// Requires n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// One representative (the canonical relabeling) of every connected graph on
/// n vertices, ordered by canonical code. 1 <= n <= 8.
const std::vector<Graph>& connected_graphs(std::size_t n);

/// connected_graphs(n_min) ... connected_graphs(n_max), concatenated.
std::vector<Graph> connected_graphs_between(std::size_t n_min, std::size_t n_max);

}  // namespace tough
