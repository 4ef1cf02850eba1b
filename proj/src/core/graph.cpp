#include "toughness/core/graph.hpp"

#include "toughness/core/errors.hpp"

#include <bit>

namespace tough {

std::vector<Vertex> mask_to_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  out.reserve(std::popcount(mask));
  while (mask != 0) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

VertexMask vertices_to_mask(std::span<const Vertex> vertices) {
  VertexMask mask = 0;
  for (Vertex v : vertices) {
    if (v >= kMaskCap) throw DomainError("vertex " + std::to_string(v) + " does not fit a 64-bit mask");
    mask |= vertex_bit(v);
  }
  return mask;
}

Graph::Graph(std::size_t n) : n_(n), rows_(n * ((n + 63) / 64), 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) insert_edge(e.u, e.v);
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(n_) +
                      " vertices");
  }
}

void Graph::set(Vertex u, Vertex v, bool value) {
  const std::uint64_t bit_u = std::uint64_t{1} << (u % 64);
  const std::uint64_t bit_v = std::uint64_t{1} << (v % 64);
  if (value) {
    rows_[u * words() + v / 64] |= bit_v;
    rows_[v * words() + u / 64] |= bit_u;
  } else {
    rows_[u * words() + v / 64] &= ~bit_v;
    rows_[v * words() + u / 64] &= ~bit_u;
  }
}

void Graph::insert_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  if (bit(u, v)) throw DomainError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  set(u, v, true);
  ++m_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return bit(u, v);
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (std::size_t w = 0; w < words(); ++w) d += std::popcount(rows_[v * words() + w]);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words(); ++w) {
    std::uint64_t row = rows_[v * words() + w];
    while (row != 0) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(row)));
      row &= row - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexMask Graph::neighbor_mask(Vertex v) const {
  if (n_ > kMaskCap) throw SizeCapError("neighbor_mask", n_, kMaskCap);
  check_vertex(v);
  return rows_[v];
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  Graph copy = *this;
  copy.insert_edge(u, v);
  return copy;
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v || !g_.has_edge(u, v)) g_.insert_edge(u, v);
  return *this;
}

}  // namespace tough
