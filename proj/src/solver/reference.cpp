// Serial oracles for the cutset kernels. They share no code with the kernels
// beyond the Graph type: every subset is visited and components are counted
// with a fresh union-find, so a defect in the bit-parallel path cannot hide here.

#include "toughness/core/errors.hpp"
#include "toughness/core/union_find.hpp"
#include "toughness/solver/toughness.hpp"

#include <bit>
#include <cstdint>

namespace tough::reference {
namespace {

class Enumerator {
 public:
  explicit Enumerator(const Graph& g, const char* op) : n_(g.vertex_count()), edges_(g.edges()) {
    if (n_ == 0) throw DomainError(std::string(op) + ": graph has no vertices");
    if (n_ > kReferenceCap) throw SizeCapError(op, n_, kReferenceCap);
  }

  std::size_t n() const { return n_; }
  std::uint64_t subset_count() const { return std::uint64_t{1} << n_; }

  std::size_t omega(std::uint64_t removed) {
    UnionFind uf(n_);
    for (const Edge& e : edges_) {
      if (((removed >> e.u) & 1U) == 0 && ((removed >> e.v) & 1U) == 0) uf.unite(e.u, e.v);
    }
    return uf.set_count() - static_cast<std::size_t>(std::popcount(removed));
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

}  // namespace

ToughnessResult toughness_exhaustive(const Graph& g) {
  Enumerator en(g, "toughness_exhaustive");
  bool have = false;
  std::uint64_t best_mask = 0;
  std::size_t best_size = 0;
  std::size_t best_omega = 1;
  for (std::uint64_t s = 0; s < en.subset_count(); ++s) {
    const std::size_t omega = en.omega(s);
    if (omega < 2) continue;
    const auto size = static_cast<std::size_t>(std::popcount(s));
    // size/omega < best_size/best_omega, or equal ratio with fewer vertices.
    const std::size_t lhs = size * best_omega;
    const std::size_t rhs = best_size * omega;
    if (!have || lhs < rhs || (lhs == rhs && size < best_size)) {
      have = true;
      best_mask = s;
      best_size = size;
      best_omega = omega;
    }
  }
  if (!have) return {ToughnessValue::infinite(), std::nullopt};
  if (best_size == 0) return {ToughnessValue::zero(), std::nullopt};
  CutsetWitness w{best_mask, best_omega, Rational(BigInt(best_size), BigInt(best_omega))};
  return {ToughnessValue::finite(*w.ratio), w};
}

TToughResult is_t_tough_exhaustive(const Graph& g, const Rational& t) {
  Enumerator en(g, "is_t_tough_exhaustive");
  if (t.is_zero()) throw DomainError("is_t_tough_exhaustive: t must be positive");
  bool have = false;
  std::uint64_t best_mask = 0;
  std::size_t best_omega = 0;
  for (std::uint64_t s = 0; s < en.subset_count(); ++s) {
    const std::size_t omega = en.omega(s);
    if (omega < 2) continue;
    const auto size = std::popcount(s);
    // t·ω > |S|  <=>  a·ω > b·|S|
    if (t.numerator() * omega <= t.denominator() * size) continue;
    if (!have || size < std::popcount(best_mask)) {
      have = true;
      best_mask = s;
      best_omega = omega;
    }
  }
  if (!have) return {true, std::nullopt};
  CutsetWitness w{best_mask, best_omega, std::nullopt};
  if (best_mask != 0) w.ratio = Rational(BigInt(std::popcount(best_mask)), BigInt(best_omega));
  return {false, w};
}

}  // namespace tough::reference
