#pragma once

#include "toughness/core/graph.hpp"
#include "toughness/core/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace tough {

/// Zero (disconnected), Finite(a/b) or Infinite (complete, including n <= 1).
class ToughnessValue {
 public:
  enum class Kind { Zero, Finite, Infinite };

  static ToughnessValue zero() { return ToughnessValue(Kind::Zero, {}); }
  static ToughnessValue infinite() { return ToughnessValue(Kind::Infinite, {}); }
  static ToughnessValue finite(Rational value);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  /// The finite value; throws DomainError for Zero and Infinite.
  const Rational& value() const;

  /// "0", "a/b" or "inf".
  std::string to_string() const;

  /// Zero < Finite(any) < Infinite; Finite values compare exactly.
  friend std::strong_ordering operator<=>(const ToughnessValue& x, const ToughnessValue& y);
  friend bool operator==(const ToughnessValue& x, const ToughnessValue& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

  /// Compares against a positive finite t (Zero < t < Infinite).
  friend std::strong_ordering operator<=>(const ToughnessValue& x, const Rational& t);
  friend bool operator==(const ToughnessValue& x, const Rational& t) {
    return (x <=> t) == std::strong_ordering::equal;
  }

 private:
  ToughnessValue(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Rational value_;
};

/// A removed vertex set together with ω(G - S) and |S|/ω (absent when S is empty).
struct CutsetWitness {
  VertexMask removed = 0;
  std::size_t component_count = 0;
  std::optional<Rational> ratio;

  std::vector<Vertex> vertices() const { return mask_to_vertices(removed); }
  std::size_t size() const;

  friend bool operator==(const CutsetWitness&, const CutsetWitness&) = default;
};

/// Recomputes ω(g - removed) and builds the witness record.
CutsetWitness make_witness(const Graph& g, VertexMask removed);

struct ToughnessResult {
  ToughnessValue value = ToughnessValue::zero();
  /// Present iff value is Finite; always a tough set.
  std::optional<CutsetWitness> witness;
};

struct TToughResult {
  bool tough = false;
  /// Present iff !tough: the first violating set by (|S|, mask).
  std::optional<CutsetWitness> violation;

  explicit operator bool() const noexcept { return tough; }
};

/// Decides τ(g) >= t: every cutset S satisfies t·ω(g - S) <= |S|. Disconnected
/// graphs fail every t > 0 with S = ∅; complete graphs pass every t. Sets are
/// scanned by increasing size and the scan stops at the first violation.
/// Throws DomainError for n = 0 or t = 0 and SizeCapError for n > 64.
TToughResult is_t_tough(const Graph& g, const Rational& t);

/// Exact toughness by cutset minimization. The witness is the minimizing
/// cutset of smallest size, then smallest mask.
ToughnessResult toughness(const Graph& g);

/// Same value as toughness(), obtained by binary search over the candidate
/// ratios a/b with 1 <= a,b <= n-1 using only is_t_tough. The witness is the
/// violation reported at τ + 1/n², which no other cutset ratio can reach.
/// Throws DomainError unless g is connected and noncomplete.
ToughnessResult toughness_via_decision(const Graph& g);

/// Every reduced fraction a/b with 1 <= a,b <= n-1, ascending.
std::vector<Rational> candidate_ratios(std::size_t n);

/// First cutset (by size, then mask) whose ratio |S|/ω equals t exactly. Only
/// meaningful when τ(g) >= t, where such a set exists iff τ(g) = t.
std::optional<CutsetWitness> find_cutset_with_ratio(const Graph& g, const Rational& t);

/// τ(g) = t via the separator pair is_t_tough(g, t) ∧ ¬is_t_tough(g, t + 1/n²).
bool has_toughness_via_separator(const Graph& g, const Rational& t);

namespace reference {

/// Largest graph the serial oracles accept.
inline constexpr std::size_t kReferenceCap = 26;

/// Serial oracle: scans all 2^n subsets and counts components with union-find.
ToughnessResult toughness_exhaustive(const Graph& g);
TToughResult is_t_tough_exhaustive(const Graph& g, const Rational& t);

}  // namespace reference
}  // namespace tough
