#include "toughness/harness/enumerate.hpp"

#include "toughness/core/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <mutex>
#include <set>
#include <string>

namespace tough {
namespace {

std::size_t pair_bits(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

// Depth-first search over degree-respecting relabelings, keeping the largest
// code. A partial labeling whose code prefix is already below the best is cut.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.vertex_count()), total_bits_(pair_bits(n_)) {
    for (Vertex v = 0; v < n_; ++v) {
      rows_[v] = g.neighbor_mask(v);
      degree_[v] = static_cast<std::size_t>(std::popcount(rows_[v]));
    }
    std::array<std::size_t, kCanonicalMax> sorted = degree_;
    std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(n_), std::greater<>());
    target_ = sorted;
  }

  std::uint64_t run() {
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(std::size_t p, VertexMask used, std::uint64_t code) {
    if (p == n_) {
      if (!have_ || code > best_) {
        best_ = code;
        have_ = true;
      }
      return;
    }
    const std::size_t bits_after = pair_bits(p + 1);
    for (Vertex x = 0; x < n_; ++x) {
      if ((used >> x) & 1U || degree_[x] != target_[p]) continue;
      std::uint64_t column = 0;
      for (std::size_t i = 0; i < p; ++i) column = (column << 1) | ((rows_[perm_[i]] >> x) & 1U);
      const std::uint64_t next = (code << p) | column;
      if (have_ && next < (best_ >> (total_bits_ - bits_after))) continue;
      perm_[p] = x;
      search(p + 1, used | vertex_bit(x), next);
    }
  }

  std::size_t n_;
  std::size_t total_bits_;
  std::array<VertexMask, kCanonicalMax> rows_{};
  std::array<std::size_t, kCanonicalMax> degree_{};
  std::array<std::size_t, kCanonicalMax> target_{};
  std::array<Vertex, kCanonicalMax> perm_{};
  std::uint64_t best_ = 0;
  bool have_ = false;
};

std::vector<Graph> extend(const std::vector<Graph>& smaller, std::size_t n) {
  std::set<std::uint64_t> codes;
  for (const Graph& h : smaller) {
    const std::vector<Edge> base = h.edges();
    for (VertexMask nbrs = 1; nbrs < (VertexMask{1} << (n - 1)); ++nbrs) {
      std::vector<Edge> edges = base;
      for (Vertex v : mask_to_vertices(nbrs)) edges.emplace_back(v, static_cast<Vertex>(n - 1));
      codes.insert(canonical_code(Graph(n, edges)));
    }
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (pair_bits(n) > 64) throw SizeCapError("adjacency_code", n, kCanonicalMax);
  std::uint64_t code = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(i, j) ? 1U : 0U);
  return code;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  const std::size_t total = pair_bits(n);
  if (total > 64) throw SizeCapError("graph_from_code", n, kCanonicalMax);
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((code >> (total - 1 - k)) & 1U) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::uint64_t canonical_code(const Graph& g) {
  if (g.vertex_count() > kCanonicalMax) throw SizeCapError("canonical_code", g.vertex_count(), kCanonicalMax);
  if (g.vertex_count() < 2) return 0;
  return CanonicalSearch(g).run();
}

const std::vector<Graph>& connected_graphs(std::size_t n) {
  if (n < 1 || n > kEnumerationMax) {
    throw DomainError("connected_graphs: n must be in 1.." + std::to_string(kEnumerationMax));
  }
  static std::mutex mutex;
  static std::array<std::vector<Graph>, kEnumerationMax + 1> cache;
  std::lock_guard lock(mutex);
  if (cache[1].empty()) cache[1].push_back(Graph(1));
  for (std::size_t m = 2; m <= n; ++m) {
    if (cache[m].empty()) cache[m] = extend(cache[m - 1], m);
  }
  return cache[n];
}

std::vector<Graph> connected_graphs_between(std::size_t n_min, std::size_t n_max) {
  std::vector<Graph> out;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const std::vector<Graph>& batch = connected_graphs(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace tough
