#include "toughness/solver/toughness.hpp"

#include "toughness/core/errors.hpp"
#include "toughness/core/operations.hpp"
#include "toughness/solver/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace tough {

ToughnessValue ToughnessValue::finite(Rational value) {
  if (value.is_zero()) throw DomainError("finite toughness must be positive");
  return ToughnessValue(Kind::Finite, std::move(value));
}

const Rational& ToughnessValue::value() const {
  if (kind_ != Kind::Finite) throw DomainError("toughness value " + to_string() + " has no finite value");
  return value_;
}

std::string ToughnessValue::to_string() const {
  switch (kind_) {
    case Kind::Zero:
      return "0";
    case Kind::Infinite:
      return "inf";
    case Kind::Finite:
      break;
  }
  return value_.to_string();
}

std::strong_ordering operator<=>(const ToughnessValue& x, const ToughnessValue& y) {
  if (x.kind_ != y.kind_) return static_cast<int>(x.kind_) <=> static_cast<int>(y.kind_);
  if (x.kind_ != ToughnessValue::Kind::Finite) return std::strong_ordering::equal;
  return x.value_ <=> y.value_;
}

std::strong_ordering operator<=>(const ToughnessValue& x, const Rational& t) {
  switch (x.kind_) {
    case ToughnessValue::Kind::Zero:
      return t.is_zero() ? std::strong_ordering::equal : std::strong_ordering::less;
    case ToughnessValue::Kind::Infinite:
      return std::strong_ordering::greater;
    case ToughnessValue::Kind::Finite:
      break;
  }
  return x.value_ <=> t;
}

std::size_t CutsetWitness::size() const { return static_cast<std::size_t>(std::popcount(removed)); }

CutsetWitness make_witness(const Graph& g, VertexMask removed) {
  CutsetWitness w;
  w.removed = removed;
  w.component_count = components_after_removal(g, removed);
  if (removed != 0 && w.component_count > 0) {
    w.ratio = Rational(BigInt(std::popcount(removed)), BigInt(w.component_count));
  }
  return w;
}

namespace {

// Rows of g as masks, for the kernels.
struct MaskRows {
  std::size_t n = 0;
  VertexMask full = 0;
  VertexMask rows[kMaskCap] = {};

  explicit MaskRows(const Graph& g) : n(g.vertex_count()), full(full_mask(g.vertex_count())) {
    for (Vertex v = 0; v < n; ++v) rows[v] = g.neighbor_mask(v);
  }

  std::size_t omega(VertexMask removed) const { return count_components(rows, full & ~removed); }
};

void check_solvable(const Graph& g, const char* op) {
  if (g.vertex_count() == 0) throw DomainError(std::string(op) + ": graph has no vertices");
  if (g.vertex_count() > kMaskCap) throw SizeCapError(op, g.vertex_count(), kMaskCap);
}

void check_positive(const Rational& t, const char* op) {
  if (t.is_zero()) throw DomainError(std::string(op) + ": t must be positive");
}

// Largest ω a k-set may leave without violating t = a/b: max(floor(b·k / a), 1),
// clamped to n so that it fits an int.
std::size_t component_threshold(const Rational& t, std::size_t k, std::size_t n) {
  const BigInt floor_value = (t.denominator() * k) / t.numerator();
  if (floor_value >= n) return n;
  return std::max<std::size_t>(1, static_cast<std::size_t>(floor_value));
}

}  // namespace

TToughResult is_t_tough(const Graph& g, const Rational& t) {
  check_solvable(g, "is_t_tough");
  check_positive(t, "is_t_tough");
  if (is_complete(g)) return {true, std::nullopt};

  const MaskRows m(g);
  for (std::size_t k = 0; k + 2 <= m.n; ++k) {
    const std::size_t threshold = component_threshold(t, k, m.n);
    // ω(G - S) <= n - k, and the threshold only grows with k.
    if (m.n - k <= threshold) break;
    const auto hit = kernel::first_k_subset(m.n, k, [&](VertexMask s) { return m.omega(s) > threshold; });
    if (hit) return {false, make_witness(g, *hit)};
  }
  return {true, std::nullopt};
}

ToughnessResult toughness(const Graph& g) {
  check_solvable(g, "toughness");
  if (is_complete(g)) return {ToughnessValue::infinite(), std::nullopt};
  if (!is_connected(g)) return {ToughnessValue::zero(), std::nullopt};

  const MaskRows m(g);
  std::size_t best_k = 0;
  kernel::Scored best;
  for (std::size_t k = 1; k + 2 <= m.n; ++k) {
    // Every k-set has ratio >= k / (n - k); equal ratios lose the size tie-break.
    if (best.score > 0 && k * static_cast<std::size_t>(best.score) >= best_k * (m.n - k)) break;
    const auto found = kernel::best_k_subset(m.n, k, static_cast<int>(m.n - k), [&](VertexMask s) {
      const std::size_t omega = m.omega(s);
      return omega >= 2 ? static_cast<int>(omega) : -1;
    });
    if (!found) continue;
    if (best.score < 0 || k * static_cast<std::size_t>(best.score) < best_k * static_cast<std::size_t>(found->score)) {
      best = *found;
      best_k = k;
    }
  }
  if (best.score < 0) throw std::logic_error("toughness: connected noncomplete graph without a cutset");
  CutsetWitness witness = make_witness(g, best.mask);
  return {ToughnessValue::finite(*witness.ratio), std::move(witness)};
}

std::vector<Rational> candidate_ratios(std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 1; b < n; ++b) {
      Rational r{BigInt(a), BigInt(b)};
      if (r.numerator() == a) out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ToughnessResult toughness_via_decision(const Graph& g) {
  check_solvable(g, "toughness_via_decision");
  if (is_complete(g) || !is_connected(g)) {
    throw DomainError("toughness_via_decision: graph must be connected and noncomplete");
  }
  const std::size_t n = g.vertex_count();
  const std::vector<Rational> candidates = candidate_ratios(n);

  // Invariant: candidates[lo] is tough, candidates[hi] is not (hi == size acts as +inf).
  std::size_t lo = 0;
  std::size_t hi = candidates.size();
  if (!is_t_tough(g, candidates[lo])) throw std::logic_error("toughness_via_decision: 1/(n-1) must be tough");
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (is_t_tough(g, candidates[mid])) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const Rational& tau = candidates[lo];
  const TToughResult above = is_t_tough(g, tau + Rational(BigInt(1), BigInt(n * n)));
  if (above.tough || !above.violation || above.violation->ratio != tau) {
    throw std::logic_error("toughness_via_decision: separator did not yield a tough set");
  }
  return {ToughnessValue::finite(tau), above.violation};
}

std::optional<CutsetWitness> find_cutset_with_ratio(const Graph& g, const Rational& t) {
  check_solvable(g, "find_cutset_with_ratio");
  check_positive(t, "find_cutset_with_ratio");
  const MaskRows m(g);
  for (std::size_t k = 1; k + 2 <= m.n; ++k) {
    const BigInt scaled = t.denominator() * k;
    if (scaled % t.numerator() != 0) continue;
    const BigInt target_big = scaled / t.numerator();
    if (target_big < 2 || target_big > m.n - k) continue;
    const auto target = static_cast<std::size_t>(target_big);
    const auto hit = kernel::first_k_subset(m.n, k, [&](VertexMask s) { return m.omega(s) == target; });
    if (hit) return make_witness(g, *hit);
  }
  return std::nullopt;
}

bool has_toughness_via_separator(const Graph& g, const Rational& t) {
  check_solvable(g, "has_toughness_via_separator");
  check_positive(t, "has_toughness_via_separator");
  const std::size_t n = g.vertex_count();
  // A finite toughness is a/b with a, b <= n - 1; nothing else can be hit exactly.
  if (t.numerator() >= n || t.denominator() >= n) return false;
  if (!is_t_tough(g, t)) return false;
  return !is_t_tough(g, t + Rational(BigInt(1), BigInt(n * n))).tough;
}

}  // namespace tough
