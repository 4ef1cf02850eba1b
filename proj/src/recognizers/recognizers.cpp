#include "toughness/recognizers/recognizers.hpp"

#include "toughness/core/errors.hpp"
#include "toughness/core/operations.hpp"
#include "toughness/solver/independence.hpp"
#include "toughness/solver/parallel.hpp"

#include <bit>

namespace tough {
namespace {

void check_input(const Graph& g, const char* op) {
  if (g.vertex_count() == 0) throw DomainError(std::string(op) + ": graph has no vertices");
  if (g.vertex_count() > kMaskCap) throw SizeCapError(op, g.vertex_count(), kMaskCap);
}

void check_positive(const Rational& t, const char* op) {
  if (t.is_zero()) throw DomainError(std::string(op) + ": t must be positive");
}

void check_edge(const Graph& g, Edge e, const char* op) {
  if (e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) {
    throw DomainError(std::string(op) + ": {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
  }
}

struct Rows {
  VertexMask full = 0;
  VertexMask rows[kMaskCap] = {};

  explicit Rows(const Graph& g) : full(full_mask(g.vertex_count())) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) rows[v] = g.neighbor_mask(v);
  }

  std::size_t omega(VertexMask removed) const { return count_components(rows, full & ~removed); }
};

bool is_bridge_of_remainder(const Graph& g, Edge e, VertexMask removed) {
  if ((removed & (vertex_bit(e.u) | vertex_bit(e.v))) != 0) return false;
  const Graph rest = induced_subgraph(g, full_mask(g.vertex_count()) & ~removed);
  const auto below = [&](Vertex x) { return static_cast<Vertex>(std::popcount(~removed & (vertex_bit(x) - 1))); };
  return is_bridge(rest, Edge(below(e.u), below(e.v)));
}

bool is_small_clique(const Graph& g, std::size_t n) { return g.vertex_count() == n && is_complete(g); }

}  // namespace

MinToughResult is_minimally_t_tough(const Graph& g, const Rational& t) {
  check_input(g, "is_minimally_t_tough");
  check_positive(t, "is_minimally_t_tough");
  if (is_complete(g)) return {false, std::nullopt, "complete graph has infinite toughness"};
  if (!is_connected(g)) return {false, std::nullopt, "disconnected graph has toughness 0"};

  const TToughResult tough = is_t_tough(g, t);
  if (!tough) return {false, std::nullopt, "not t-tough"};
  std::optional<CutsetWitness> tough_set = find_cutset_with_ratio(g, t);
  if (!tough_set) return {false, std::nullopt, "toughness exceeds t"};

  MinToughCertificate cert{t, *tough_set, {}};
  for (const Edge& e : g.edges()) {
    const TToughResult after = is_t_tough(delete_edge(g, e), t);
    if (after) {
      return {false, std::nullopt,
              "deleting {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} keeps the graph t-tough"};
    }
    cert.edges.push_back({e, after.violation->removed == 0, *after.violation});
  }
  return {true, std::move(cert), ""};
}

EdgeWitness edge_witness(const Graph& g, const Rational& t, Edge e) {
  check_input(g, "edge_witness");
  check_positive(t, "edge_witness");
  check_edge(g, e, "edge_witness");
  const Graph without = delete_edge(g, e);
  if (is_bridge(g, e)) return {e, true, make_witness(without, 0)};

  const std::size_t n = g.vertex_count();
  const Rows with_rows(g);
  const Rows without_rows(without);
  const VertexMask ends = vertex_bit(e.u) | vertex_bit(e.v);
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    // ω(g - S) <= |S|/t < ω(g - e - S) = ω(g - S) + 1 pins ω(g - S) to floor(|S|/t).
    const BigInt floor_big = (t.denominator() * k) / t.numerator();
    if (floor_big >= n) break;
    const auto target = static_cast<std::size_t>(floor_big);
    if (target == 0) continue;
    const auto hit = kernel::first_k_subset(n, k, [&](VertexMask s) {
      if ((s & ends) != 0) return false;
      return with_rows.omega(s) == target && without_rows.omega(s) == target + 1;
    });
    if (hit) return {e, false, make_witness(without, *hit)};
  }
  throw PreconditionError("edge_witness: no witness set for {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "}; the graph is not minimally " + t.to_string() + "-tough");
}

bool edge_witness_holds(const Graph& g, const Rational& t, const EdgeWitness& w) {
  const Edge e = w.edge;
  if (e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) return false;
  const Graph without = delete_edge(g, e);
  const VertexMask s = w.witness.removed;
  if (w.bridge) return s == 0 && is_bridge(g, e);
  const auto size = static_cast<std::size_t>(std::popcount(s));
  const std::size_t before = components_after_removal(g, s);
  const std::size_t after = components_after_removal(without, s);
  if (w.witness.component_count != after) return false;
  // t = a/b: ω <= |S|/t  <=>  a·ω <= b·|S|
  const bool holds_in_g = t.numerator() * before <= t.denominator() * size;
  const bool fails_without = t.numerator() * after > t.denominator() * size;
  return holds_in_g && fails_without && is_bridge_of_remainder(g, e, s);
}

std::string to_string(AlmostMinClass c) {
  switch (c) {
    case AlmostMinClass::MinimallyOneTough:
      return "minimally-1-tough";
    case AlmostMinClass::IsK1:
      return "K1";
    case AlmostMinClass::IsK2:
      return "K2";
    case AlmostMinClass::IsK3:
      return "K3";
    case AlmostMinClass::NotAlmostMinimal:
      break;
  }
  return "not-almost-minimal";
}

AlmostMinClass is_almost_minimally_1_tough(const Graph& g) {
  check_input(g, "is_almost_minimally_1_tough");
  const Rational one(1);
  if (!is_t_tough(g, one)) return AlmostMinClass::NotAlmostMinimal;
  for (const Edge& e : g.edges()) {
    if (is_t_tough(delete_edge(g, e), one)) return AlmostMinClass::NotAlmostMinimal;
  }
  if (g.vertex_count() == 1) return AlmostMinClass::IsK1;
  if (is_small_clique(g, 2)) return AlmostMinClass::IsK2;
  if (is_small_clique(g, 3)) return AlmostMinClass::IsK3;
  if (find_cutset_with_ratio(g, one)) return AlmostMinClass::MinimallyOneTough;
  throw std::logic_error("is_almost_minimally_1_tough: " + std::to_string(g.vertex_count()) +
                         "-vertex graph has toughness above 1 yet loses it on every edge deletion");
}

AlmostMinimalViews almost_minimal_views(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw DomainError("almost_minimal_views: needs at least 2 vertices");
  if (n > kAlmostMinimalCheckCap) throw SizeCapError("almost_minimal_views", n, kAlmostMinimalCheckCap);
  const Rational one(1);
  AlmostMinimalViews views;

  views.by_definition = toughness(g).value >= one;
  for (const Edge& e : g.edges()) {
    if (!views.by_definition) break;
    views.by_definition = toughness(delete_edge(g, e)).value < one;
  }

  views.by_edge_sets = is_t_tough(g, one).tough;
  const Rows with_rows(g);
  for (const Edge& e : g.edges()) {
    if (!views.by_edge_sets) break;
    if (is_bridge(g, e)) continue;
    const Rows without_rows(delete_edge(g, e));
    bool found = false;
    for (VertexMask s = 0; s <= with_rows.full && !found; ++s) {
      const auto size = static_cast<std::size_t>(std::popcount(s));
      found = with_rows.omega(s) == size && without_rows.omega(s) == size + 1;
    }
    views.by_edge_sets = found;
  }

  views.by_shape = is_small_clique(g, 2) || is_small_clique(g, 3) || is_minimally_t_tough(g, one).minimal;
  return views;
}

bool check_almost_minimal_equivalence(const Graph& g) { return almost_minimal_views(g).agree(); }

bool is_alpha_critical_decision(const Graph& g, std::size_t k) {
  if (k < 1) throw DomainError("is_alpha_critical_decision: k must be at least 1");
  if (independence_number(g).alpha >= k) return false;
  for (const Edge& e : g.edges()) {
    if (independence_number(delete_edge(g, e)).alpha < k) return false;
  }
  return true;
}

bool is_alpha_critical_graph(const Graph& g) {
  const std::size_t alpha = independence_number(g).alpha;
  for (const Edge& e : g.edges()) {
    if (independence_number(delete_edge(g, e)).alpha <= alpha) return false;
  }
  return true;
}

nlohmann::ordered_json certificate_to_json(const MinToughCertificate& c) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const EdgeWitness& w : c.edges) {
    edges.push_back({{"edge", {w.edge.u, w.edge.v}}, {"bridge", w.bridge}, {"witness", w.witness.vertices()}});
  }
  return {{"t", c.t.to_string()}, {"toughSet", c.tough_set.vertices()}, {"edges", std::move(edges)}};
}

}  // namespace tough
