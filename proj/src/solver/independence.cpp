#include "toughness/solver/independence.hpp"

#include "toughness/core/errors.hpp"

#include <bit>

namespace tough {
namespace {

class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(const Graph& g) : n_(g.vertex_count()) {
    for (Vertex v = 0; v < n_; ++v) rows_[v] = g.neighbor_mask(v);
  }

  IndependenceResult solve() {
    search(full_mask(n_), 0, 0);
    return {best_size_, best_};
  }

 private:
  // Number of cliques in a greedy clique cover of `candidates`; an upper bound on α.
  std::size_t clique_cover_bound(VertexMask candidates) const {
    std::size_t cliques = 0;
    while (candidates != 0) {
      const auto v = static_cast<Vertex>(std::countr_zero(candidates));
      VertexMask extendable = candidates & rows_[v];
      candidates &= ~vertex_bit(v);
      while (extendable != 0) {
        const auto w = static_cast<Vertex>(std::countr_zero(extendable));
        candidates &= ~vertex_bit(w);
        extendable &= rows_[w];
      }
      ++cliques;
    }
    return cliques;
  }

  void search(VertexMask candidates, VertexMask chosen, std::size_t size) {
    // Isolated candidates always belong to some maximum set.
    VertexMask isolated = 0;
    for (VertexMask rest = candidates; rest != 0; rest &= rest - 1) {
      const auto v = std::countr_zero(rest);
      if ((rows_[v] & candidates) == 0) isolated |= vertex_bit(static_cast<Vertex>(v));
    }
    chosen |= isolated;
    size += static_cast<std::size_t>(std::popcount(isolated));
    candidates &= ~isolated;

    if (candidates == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + clique_cover_bound(candidates) <= best_size_) return;

    Vertex pivot = 0;
    int pivot_degree = -1;
    for (VertexMask rest = candidates; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      const int d = std::popcount(rows_[v] & candidates);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    search(candidates & ~rows_[pivot] & ~vertex_bit(pivot), chosen | vertex_bit(pivot), size + 1);
    search(candidates & ~vertex_bit(pivot), chosen, size);
  }

  std::size_t n_;
  VertexMask rows_[kMaskCap] = {};
  VertexMask best_ = 0;
  std::size_t best_size_ = 0;
};

}  // namespace

bool is_independent(const Graph& g, VertexMask set) {
  for (VertexMask rest = set; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<Vertex>(std::countr_zero(rest));
    if ((g.neighbor_mask(v) & set) != 0) return false;
  }
  return true;
}

IndependenceResult independence_number(const Graph& g) {
  if (g.vertex_count() > kMaskCap) throw SizeCapError("independence_number", g.vertex_count(), kMaskCap);
  if (g.vertex_count() == 0) return {};
  return MaxIndependentSet(g).solve();
}

namespace reference {

IndependenceResult independence_number_exhaustive(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kIndependenceOracleCap) throw SizeCapError("independence_number_exhaustive", n, kIndependenceOracleCap);
  std::vector<VertexMask> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = g.neighbor_mask(v);
  IndependenceResult best;
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best.alpha && s != 0) continue;
    bool independent = true;
    for (VertexMask rest = s; rest != 0 && independent; rest &= rest - 1) {
      independent = (rows[std::countr_zero(rest)] & s) == 0;
    }
    if (independent && (size > best.alpha)) best = {size, s};
  }
  return best;
}

}  // namespace reference
}  // namespace tough
