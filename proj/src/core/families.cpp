#include "toughness/core/families.hpp"

#include "toughness/core/errors.hpp"

#include <vector>

namespace tough::families {

Graph empty(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph complete_bipartite(std::size_t left, std::size_t right) {
  GraphBuilder b(left + right);
  for (Vertex u = 0; u < left; ++u)
    for (Vertex v = 0; v < right; ++v) b.add_edge(u, static_cast<Vertex>(left + v));
  return std::move(b).build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, 5 + i);
  }
  return std::move(b).build();
}

}  // namespace tough::families
