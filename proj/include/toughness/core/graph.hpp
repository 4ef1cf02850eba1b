#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tough {

using Vertex = std::uint32_t;

/// Vertex subset of a graph with at most 64 vertices; bit v set means v is in the set.
using VertexMask = std::uint64_t;

/// Largest vertex count representable as a VertexMask, and the hard cap of every
/// exhaustive routine.
inline constexpr std::size_t kMaskCap = 64;

inline VertexMask full_mask(std::size_t n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline VertexMask vertex_bit(Vertex v) { return VertexMask{1} << v; }

std::vector<Vertex> mask_to_vertices(VertexMask mask);
VertexMask vertices_to_mask(std::span<const Vertex> vertices);

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Adjacency is a row-major bit matrix, so any vertex count is representable;
/// graphs with n <= 64 additionally expose each row as a single VertexMask, which
/// is what the exhaustive kernels consume. Values are immutable once built:
/// every "modifying" operation returns a new graph with the same vertex indices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Neighborhood of v as a mask. Requires n <= 64.
  VertexMask neighbor_mask(Vertex v) const;

  /// Returns a copy with edge {u,v} added; loops and duplicates throw.
  Graph with_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t words() const noexcept { return (n_ + 63) / 64; }
  bool bit(Vertex u, Vertex v) const {
    return (rows_[u * words() + v / 64] >> (v % 64)) & 1U;
  }
  void set(Vertex u, Vertex v, bool value);
  void check_vertex(Vertex v) const;
  void insert_edge(Vertex u, Vertex v);

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Incremental construction for the gadget builders.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}

  /// Adds {u,v}; a repeated edge is ignored, a loop throws.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }
  std::size_t vertex_count() const noexcept { return g_.vertex_count(); }

  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  Graph g_;
};

}  // namespace tough
