#include "toughness/core/operations.hpp"

#include "toughness/core/errors.hpp"
#include "toughness/core/union_find.hpp"

#include <string>
#include <vector>

namespace tough {
namespace {

std::string edge_name(Edge e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

void require_edge(const Graph& g, Edge e, const char* op) {
  if (e.u >= g.vertex_count() || e.v >= g.vertex_count() || e.u == e.v || !g.has_edge(e.u, e.v)) {
    throw DomainError(std::string(op) + ": " + edge_name(e) + " is not an edge");
  }
}

}  // namespace

Graph delete_edge(const Graph& g, Edge e) {
  require_edge(g, e, "delete_edge");
  std::vector<Edge> kept;
  kept.reserve(g.edge_count() - 1);
  for (const Edge& f : g.edges()) {
    if (f != e) kept.push_back(f);
  }
  return Graph(g.vertex_count(), kept);
}

std::size_t components_after_removal(const Graph& g, VertexMask removed) {
  const std::size_t n = g.vertex_count();
  if (n > kMaskCap) throw SizeCapError("components_after_removal", n, kMaskCap);
  if ((removed & ~full_mask(n)) != 0) throw DomainError("components_after_removal: set is not a subset of V(g)");
  VertexMask rows[kMaskCap];
  for (Vertex v = 0; v < n; ++v) rows[v] = g.neighbor_mask(v);
  return count_components(rows, full_mask(n) & ~removed);
}

std::size_t component_count(const Graph& g) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  return uf.set_count();
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

bool is_bridge(const Graph& g, Edge e) {
  require_edge(g, e, "is_bridge");
  return component_count(delete_edge(g, e)) > component_count(g);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, VertexMask keep) {
  const std::vector<Vertex> kept = mask_to_vertices(keep & full_mask(g.vertex_count()));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (g.has_edge(kept[i], kept[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(kept.size(), edges);
}

}  // namespace tough
