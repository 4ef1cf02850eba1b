#pragma once

#include "toughness/core/graph.hpp"
#include "toughness/core/rational.hpp"
#include "toughness/solver/toughness.hpp"

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tough {

/// Per-edge entry of a minimality certificate. Bridges carry an empty set.
struct EdgeWitness {
  Edge edge;
  bool bridge = false;
  CutsetWitness witness;

  friend bool operator==(const EdgeWitness&, const EdgeWitness&) = default;
};

struct MinToughCertificate {
  Rational t;
  /// A cutset with ratio exactly t.
  CutsetWitness tough_set;
  /// One entry per edge, in lexicographic edge order.
  std::vector<EdgeWitness> edges;
};

struct MinToughResult {
  bool minimal = false;
  /// Present iff minimal.
  std::optional<MinToughCertificate> certificate;
  /// Why the graph failed, for diagnostics ("" when minimal).
  std::string reason;

  explicit operator bool() const noexcept { return minimal; }
};

/// τ(g) = t and τ(g - e) < t for every edge. Each τ(g - e) < t is decided by
/// is_t_tough(g - e, t); its violating set becomes the edge's witness.
/// Throws DomainError for n = 0 or t = 0, SizeCapError for n > 64.
MinToughResult is_minimally_t_tough(const Graph& g, const Rational& t);

/// For an edge of a minimally t-tough graph: a bridge mark, or the first set S
/// (by size, then mask) with ω(g - S) <= |S|/t, ω((g - e) - S) > |S|/t and e a
/// bridge of g - S. Throws DomainError if e is not an edge and
/// PreconditionError if no such set exists.
EdgeWitness edge_witness(const Graph& g, const Rational& t, Edge e);

/// Recomputes all three clauses of an edge witness from scratch.
bool edge_witness_holds(const Graph& g, const Rational& t, const EdgeWitness& w);

enum class AlmostMinClass { MinimallyOneTough, IsK1, IsK2, IsK3, NotAlmostMinimal };

/// "minimally-1-tough", "K1", "K2", "K3" or "not-almost-minimal".
std::string to_string(AlmostMinClass c);

/// Decides τ(g) >= 1 and τ(g - e) < 1 for every edge, then names the case.
/// K_1 qualifies vacuously and is reported as IsK1.
AlmostMinClass is_almost_minimally_1_tough(const Graph& g);

struct AlmostMinimalViews {
  /// τ(g) >= 1 and τ(g - e) < 1 for all e, by full toughness computations.
  bool by_definition = false;
  /// 1-tough, and every non-bridge e has S with ω(g - S) = |S|, ω((g - e) - S) = |S| + 1.
  bool by_edge_sets = false;
  /// Minimally 1-tough, K_2 or K_3.
  bool by_shape = false;

  bool agree() const { return by_definition == by_edge_sets && by_edge_sets == by_shape; }
};

inline constexpr std::size_t kAlmostMinimalCheckCap = 20;

/// Evaluates three independent characterizations of almost minimal 1-toughness.
/// Requires 2 <= n <= 20.
AlmostMinimalViews almost_minimal_views(const Graph& g);
bool check_almost_minimal_equivalence(const Graph& g);

/// α(g) < k and α(g - e) >= k for every edge. Edgeless graphs reduce to α(g) < k.
/// Throws DomainError for k < 1.
bool is_alpha_critical_decision(const Graph& g, std::size_t k);

/// α(g - e) > α(g) for every edge; true for edgeless graphs.
bool is_alpha_critical_graph(const Graph& g);

/// {"t": "a/b", "toughSet": [...], "edges": [{"edge": [u, v], "bridge": b, "witness": [...]}]}
nlohmann::ordered_json certificate_to_json(const MinToughCertificate& c);

}  // namespace tough
