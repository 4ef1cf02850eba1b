#include "toughness/gadgets/gadgets.hpp"

#include "toughness/core/errors.hpp"
#include "toughness/core/operations.hpp"
#include "toughness/solver/toughness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tough {
namespace {

void require_connected_host(const Graph& g, const char* op) {
  if (g.vertex_count() == 0) throw DomainError(std::string(op) + ": host graph has no vertices");
  if (!is_connected(g)) throw DomainError(std::string(op) + ": host graph must be connected");
}

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

// V blocks and their host-edge joins, shared by both G_alpha constructions.
void add_clique_blocks(GraphBuilder& b, const Graph& g, std::size_t block) {
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < block; ++k)
      for (std::size_t l = k + 1; l < block; ++l) b.add_edge(vx(i * block + k), vx(i * block + l));
  for (const Edge& e : g.edges())
    for (std::size_t k = 0; k < block; ++k)
      for (std::size_t l = 0; l < block; ++l) b.add_edge(vx(e.u * block + k), vx(e.v * block + l));
}

}  // namespace

std::string Role::to_string() const {
  const auto s = [](std::size_t x) { return std::to_string(x); };
  switch (kind) {
    case Kind::V:
      return "V(" + s(a) + "," + s(b) + ")";
    case Kind::U:
      return "U(" + s(a) + "," + s(b) + "," + s(c) + ")";
    case Kind::W:
      return "W(" + s(a) + "," + s(b) + ")";
    case Kind::Pendant:
      return "Pendant(" + s(a) + "," + s(b) + ")";
    case Kind::Host:
      return "Host(" + s(a) + ")";
    case Kind::GlueCopy:
      break;
  }
  return "GlueCopy(" + s(a) + "," + s(b) + ")";
}

std::size_t GadgetLabeling::count(Role::Kind kind) const {
  return static_cast<std::size_t>(
      std::count_if(roles.begin(), roles.end(), [kind](const Role& r) { return r.kind == kind; }));
}

std::vector<Vertex> GadgetLabeling::vertices_of(Role::Kind kind) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < roles.size(); ++v)
    if (roles[v].kind == kind) out.push_back(vx(v));
  return out;
}

VertexMask GadgetLabeling::mask_of(Role::Kind kind) const {
  const std::vector<Vertex> vs = vertices_of(kind);
  return vertices_to_mask(vs);
}

Gadget build_G_alpha(const Graph& g, std::size_t alpha) {
  require_connected_host(g, "build_G_alpha");
  if (alpha < 1) throw DomainError("build_G_alpha: alpha must be positive");
  const std::size_t n = g.vertex_count();
  const std::size_t u0 = n * alpha;
  const std::size_t w0 = 2 * n * alpha;

  GraphBuilder b(w0 + alpha);
  add_clique_blocks(b, g, alpha);
  GadgetLabeling labels;
  labels.roles.resize(w0 + alpha);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < alpha; ++j) {
      const std::size_t v = i * alpha + j;
      const std::size_t u = u0 + v;
      b.add_edge(vx(u), vx(v));
      b.add_edge(vx(u), vx(w0 + j));
      labels.roles[v] = Role::v(i, j);
      labels.roles[u] = Role::u(i, j, 0);
    }
  }
  for (std::size_t j = 0; j < alpha; ++j) labels.roles[w0 + j] = Role::w(j, 0);
  return {std::move(b).build(), std::move(labels)};
}

Gadget build_G_t_alpha(const Graph& g, std::size_t t, std::size_t alpha) {
  require_connected_host(g, "build_G_t_alpha");
  if (t < 1 || alpha < 1) throw DomainError("build_G_t_alpha: t and alpha must be positive");
  const std::size_t n = g.vertex_count();
  if (n < t) {
    throw DomainError("build_G_t_alpha: host has " + std::to_string(n) + " vertices, fewer than t = " +
                      std::to_string(t));
  }
  const std::size_t block = t * alpha;
  const std::size_t u0 = n * block;
  const std::size_t w0 = 2 * n * block;

  GraphBuilder b(w0 + block);
  add_clique_blocks(b, g, block);
  GadgetLabeling labels;
  labels.roles.resize(w0 + block);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < alpha; ++j) {
      for (std::size_t s = 0; s < t; ++s) {
        const std::size_t v = i * block + j * t + s;
        const std::size_t u = u0 + v;
        b.add_edge(vx(u), vx(v));
        for (std::size_t r = s + 1; r < t; ++r) b.add_edge(vx(u), vx(u + r - s));
        for (std::size_t l = 0; l < t; ++l) b.add_edge(vx(u), vx(w0 + j * t + l));
        labels.roles[v] = Role::v(i, j * t + s);
        labels.roles[u] = Role::u(i, j, s);
      }
    }
  }
  for (std::size_t j = 0; j < alpha; ++j)
    for (std::size_t l = 0; l < t; ++l) labels.roles[w0 + j * t + l] = Role::w(j, l);
  return {std::move(b).build(), std::move(labels)};
}

Gadget attach_pendants(const Graph& g, std::size_t b) {
  require_connected_host(g, "attach_pendants");
  if (b < 2) throw DomainError("attach_pendants: b must be at least 2");
  const std::size_t n = g.vertex_count();
  GraphBuilder builder(n * b);
  GadgetLabeling labels;
  labels.roles.resize(n * b);
  for (const Edge& e : g.edges()) builder.add_edge(e.u, e.v);
  for (std::size_t i = 0; i < n; ++i) {
    labels.roles[i] = Role::host(i);
    for (std::size_t p = 0; p + 1 < b; ++p) {
      const std::size_t leaf = n + i * (b - 1) + p;
      builder.add_edge(vx(i), vx(leaf));
      labels.roles[leaf] = Role::pendant(i, p);
    }
  }
  return {std::move(builder).build(), std::move(labels)};
}

Gadget build_H(std::size_t a, std::size_t b) {
  if (a < 1 || b < 2 * a) throw DomainError("build_H: requires b >= 2a >= 2");
  if (std::gcd(a, b) != 1) throw DomainError("build_H: a and b must be coprime");
  const std::size_t u0 = a;
  const std::size_t w0 = b;
  GraphBuilder builder(a + b);
  GadgetLabeling labels;
  labels.roles.resize(a + b);
  for (std::size_t i = 0; i < a; ++i) {
    labels.roles[i] = Role::v(0, i);
    labels.roles[w0 + i] = Role::w(0, i);
    for (std::size_t k = i + 1; k < a; ++k) builder.add_edge(vx(i), vx(k));
    for (std::size_t s = 0; s < b - a; ++s) builder.add_edge(vx(i), vx(u0 + s));
    builder.add_edge(vx(i), vx(w0 + i));
  }
  for (std::size_t s = 0; s < b - a; ++s) labels.roles[u0 + s] = Role::u(0, 0, s);
  return {std::move(builder).build(), std::move(labels)};
}

Minimization minimize_tough_edges(const Graph& h, const Rational& t) {
  if (h.vertex_count() > kMaskCap) throw SizeCapError("minimize_tough_edges", h.vertex_count(), kMaskCap);
  const ToughnessResult tau = toughness(h);
  if (!(tau.value == t)) {
    throw PreconditionError("minimize_tough_edges: toughness is " + tau.value.to_string() + ", expected " +
                            t.to_string());
  }
  Minimization out{h, {}};
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (const Edge& e : out.graph.edges()) {
      Graph candidate = delete_edge(out.graph, e);
      if (is_t_tough(candidate, t)) {
        out.graph = std::move(candidate);
        out.deleted.push_back(e);
        deleted = true;
        break;
      }
    }
  }
  return out;
}

HPrime minimize_to_H_prime(const Gadget& h, const Rational& t) {
  if (h.labeling.roles.size() != h.graph.vertex_count()) {
    throw DomainError("minimize_to_H_prime: labeling does not cover the graph");
  }
  Minimization m = minimize_tough_edges(h.graph, t);
  for (Vertex w : h.labeling.vertices_of(Role::Kind::W)) {
    if (m.graph.degree(w) != 1) throw std::logic_error("minimize_to_H_prime: a W vertex lost its only edge");
  }
  const CutsetWitness v_set = make_witness(m.graph, h.labeling.mask_of(Role::Kind::V));
  if (v_set.component_count < 2 || !v_set.ratio || *v_set.ratio != t) {
    throw std::logic_error("minimize_to_H_prime: V is not a tough set of the minimized graph");
  }
  return {{std::move(m.graph), h.labeling}, std::move(m.deleted)};
}

HPrime build_H_prime(std::size_t a, std::size_t b) {
  return minimize_to_H_prime(build_H(a, b), Rational(BigInt(a), BigInt(b)));
}

Vertex glue_point(const Gadget& h_prime) {
  for (Role::Kind kind : {Role::Kind::U, Role::Kind::W}) {
    for (Vertex u : h_prime.labeling.vertices_of(kind)) {
      if (h_prime.graph.degree(u) == 1) return u;
    }
  }
  throw PreconditionError("glue_point: no U or W vertex of degree 1");
}

Gadget glue(const Graph& g, const Graph& h, Vertex u) {
  if (u >= h.vertex_count() || h.degree(u) != 1) {
    throw DomainError("glue: vertex " + std::to_string(u) + " of the glued graph must have degree 1");
  }
  const Vertex v = h.neighbors(u).front();
  const std::size_t n = g.vertex_count();
  const std::size_t per_copy = h.vertex_count() - 2;

  // Position of each vertex of h inside a copy; v maps to the host itself.
  std::vector<std::size_t> slot(h.vertex_count(), 0);
  std::vector<Vertex> kept;
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    if (x == u || x == v) continue;
    slot[x] = kept.size();
    kept.push_back(x);
  }

  GraphBuilder b(n + n * per_copy);
  GadgetLabeling labels;
  labels.roles.resize(n + n * per_copy);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (std::size_t i = 0; i < n; ++i) {
    labels.roles[i] = Role::host(i);
    const auto at = [&](Vertex x) { return x == v ? vx(i) : vx(n + i * per_copy + slot[x]); };
    for (Vertex x : kept) labels.roles[at(x)] = Role::glue_copy(i, x);
    for (const Edge& e : h.edges()) {
      if (e.u == u || e.v == u) continue;
      b.add_edge(at(e.u), at(e.v));
    }
  }
  return {std::move(b).build(), std::move(labels)};
}

Graph blow_up(const Graph& g, Vertex v, std::size_t size) {
  if (v >= g.vertex_count()) throw DomainError("blow_up: vertex " + std::to_string(v) + " out of range");
  if (size < 1) throw DomainError("blow_up: clique size must be at least 1");
  const std::size_t n = g.vertex_count();
  GraphBuilder b(n + size - 1);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  std::vector<Vertex> clique{v};
  for (std::size_t k = 0; k + 1 < size; ++k) clique.push_back(vx(n + k));
  const std::vector<Vertex> around = g.neighbors(v);
  for (std::size_t k = 1; k < clique.size(); ++k) {
    for (std::size_t l = 0; l < k; ++l) b.add_edge(clique[l], clique[k]);
    for (Vertex x : around) b.add_edge(clique[k], x);
  }
  return std::move(b).build();
}

nlohmann::ordered_json labeling_to_json(const GadgetLabeling& labeling) {
  nlohmann::ordered_json roles = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < labeling.roles.size(); ++v) roles[std::to_string(v)] = labeling.roles[v].to_string();
  return {{"roles", std::move(roles)}};
}

}  // namespace tough
