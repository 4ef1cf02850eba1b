#pragma once

#include "toughness/core/graph.hpp"
#include "toughness/core/rational.hpp"

#include "json.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tough {

/// Role of one gadget vertex. Indices are 0-based; unused slots stay 0.
///   V(i,k)        k-th vertex of the clique block of host vertex i
///   U(i,j,s)      s-th vertex of the u-block (i, j)
///   W(j,l)        l-th vertex of the j-th w-group
///   Pendant(i,p)  p-th leaf attached to host vertex i
///   Host(i)       original vertex i
///   GlueCopy(i,x) copy of vertex x of the glued graph, attached at host i
struct Role {
  enum class Kind { V, U, W, Pendant, Host, GlueCopy };

  Kind kind = Kind::Host;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  static Role v(std::size_t i, std::size_t k) { return {Kind::V, i, k, 0}; }
  static Role u(std::size_t i, std::size_t j, std::size_t s) { return {Kind::U, i, j, s}; }
  static Role w(std::size_t j, std::size_t l) { return {Kind::W, j, l, 0}; }
  static Role pendant(std::size_t i, std::size_t p) { return {Kind::Pendant, i, p, 0}; }
  static Role host(std::size_t i) { return {Kind::Host, i, 0, 0}; }
  static Role glue_copy(std::size_t i, std::size_t x) { return {Kind::GlueCopy, i, x, 0}; }

  std::string to_string() const;
  friend bool operator==(const Role&, const Role&) = default;
};

struct GadgetLabeling {
  /// roles[v] is the role of vertex v.
  std::vector<Role> roles;

  std::size_t count(Role::Kind kind) const;
  /// Vertices with the given kind, ascending.
  std::vector<Vertex> vertices_of(Role::Kind kind) const;
  VertexMask mask_of(Role::Kind kind) const;
};

struct Gadget {
  Graph graph;
  GadgetLabeling labeling;
};

/// Clique blocks V_i of size alpha, complete bipartite (V_i; V_j) for each
/// host edge, u_{i,j} adjacent to v_{i,j} and w_j. 2nα + α vertices, numbered
/// V blocks, then U (i-major), then W. Requires a connected host.
Gadget build_G_alpha(const Graph& g, std::size_t alpha);

/// Clique blocks V_i of size tα, t-cliques U_{i,j} matched to V_i, groups W_j
/// of size t joined to every U_{i,j}. 2ntα + tα vertices. Requires a
/// connected host with n >= t. Coincides with build_G_alpha when t = 1.
Gadget build_G_t_alpha(const Graph& g, std::size_t t, std::size_t alpha);

/// b - 1 leaves on every host vertex; hosts keep indices 0..n-1 and the
/// leaves follow host by host. Requires a connected host and b >= 2.
Gadget attach_pendants(const Graph& g, std::size_t b);

/// Clique V = {v_0..v_{a-1}} joined to the independent set U of size b - a,
/// plus the matching v_i w_i. Numbered V, U, W. Requires gcd(a, b) = 1 and b >= 2a >= 2.
Gadget build_H(std::size_t a, std::size_t b);

struct Minimization {
  Graph graph;
  /// Deleted edges, in deletion order.
  std::vector<Edge> deleted;
};

/// Deletes edges while the graph stays t-tough: edges are scanned in
/// lexicographic order and the scan restarts after every deletion, until a
/// full pass deletes nothing. Requires τ(h) = t and n <= 64.
Minimization minimize_tough_edges(const Graph& h, const Rational& t);

struct HPrime {
  Gadget gadget;
  std::vector<Edge> deleted;
};

/// Minimizes build_H(a, b) at t = a/b and asserts that every W vertex still
/// has degree 1 and that V is a tough set.
HPrime minimize_to_H_prime(const Gadget& h, const Rational& t);
HPrime build_H_prime(std::size_t a, std::size_t b);

/// Lowest-index U vertex of degree 1. Some minimized graphs (2/5, 3/7) keep
/// every U vertex at degree >= 2; the lowest W vertex is used then, since its
/// neighbor also lies in the tough set V. Throws PreconditionError if neither exists.
Vertex glue_point(const Gadget& h_prime);

/// A copy of h - {u} hung on every host vertex x, with u's neighbor identified
/// with x. Hosts keep indices 0..n-1; copies follow host by host with the
/// remaining vertices of h in increasing order. Requires deg_h(u) = 1.
Gadget glue(const Graph& g, const Graph& h, Vertex u);

/// Replaces v by a clique of the given size joined to v's neighbors. v keeps
/// its index; the size - 1 new vertices are appended.
Graph blow_up(const Graph& g, Vertex v, std::size_t size);

/// {"roles": {"0": "V(0,0)", ...}} in vertex order.
nlohmann::ordered_json labeling_to_json(const GadgetLabeling& labeling);

}  // namespace tough
