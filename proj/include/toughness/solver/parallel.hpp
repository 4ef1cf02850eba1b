#pragma once

#include "toughness/core/errors.hpp"
#include "toughness/solver/subsets.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace tough {

/// Number of OpenMP workers used by the cutset kernels; 0 restores the runtime default.
void set_worker_count(int workers);
int worker_count();

/// Installs a wall-clock deadline for kernels started on this thread. Kernels
/// poll it between chunks and throw BudgetExceeded once it has passed.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::steady_clock::duration budget);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

std::optional<std::chrono::steady_clock::time_point> current_deadline();

namespace kernel {

inline constexpr std::uint64_t kMinChunk = 2048;

struct Chunking {
  std::uint64_t total;
  std::uint64_t size;
  std::uint64_t count;
};

inline Chunking chunk(std::uint64_t total) {
  const auto workers = static_cast<std::uint64_t>(std::max(1, omp_get_max_threads()));
  const std::uint64_t size = std::max(kMinChunk, total / (workers * 64) + 1);
  return {total, size, (total + size - 1) / size};
}

inline bool expired(const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  return deadline && std::chrono::steady_clock::now() > *deadline;
}

inline void lower_to(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t seen = target.load(std::memory_order_relaxed);
  while (value < seen && !target.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
  }
}

/// First k-subset of {0..n-1}, in increasing mask order, accepted by pred.
/// Chunks of the colex rank range are searched in parallel; a hit in chunk c
/// cancels every chunk after c, so the result is the same for any worker count.
template <class Pred>
std::optional<VertexMask> first_k_subset(std::size_t n, std::size_t k, const Pred& pred) {
  const Chunking plan = chunk(subsets::binomial(n, k));
  if (plan.total == 0) return std::nullopt;
  const auto deadline = current_deadline();

  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::uint64_t> found{kNone};
  std::atomic<bool> timed_out{false};
  std::vector<VertexMask> hit(plan.count, 0);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(plan.count); ++c) {
    const auto chunk_index = static_cast<std::uint64_t>(c);
    if (chunk_index > found.load(std::memory_order_relaxed) || timed_out.load(std::memory_order_relaxed)) continue;
    if (expired(deadline)) {
      timed_out.store(true);
      continue;
    }
    const std::uint64_t begin = chunk_index * plan.size;
    const std::uint64_t len = std::min(plan.size, plan.total - begin);
    VertexMask mask = subsets::colex_unrank(begin, k, n);
    for (std::uint64_t i = 0; i < len; ++i) {
      if (pred(mask)) {
        hit[chunk_index] = mask;
        lower_to(found, chunk_index);
        break;
      }
      if (i + 1 < len) mask = subsets::next_same_popcount(mask);
    }
  }
  if (timed_out.load()) throw BudgetExceeded();
  const std::uint64_t c = found.load();
  if (c == kNone) return std::nullopt;
  return hit[c];
}

struct Scored {
  VertexMask mask = 0;
  int score = -1;
};

/// k-subset with the largest score (ties: smallest mask). score < 0 marks a
/// subset as ineligible. Reaching `ceiling` ends the search early.
template <class Score>
std::optional<Scored> best_k_subset(std::size_t n, std::size_t k, int ceiling, const Score& score) {
  const Chunking plan = chunk(subsets::binomial(n, k));
  if (plan.total == 0) return std::nullopt;
  const auto deadline = current_deadline();

  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::uint64_t> saturated{kNone};
  std::atomic<bool> timed_out{false};
  std::vector<Scored> best(plan.count);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(plan.count); ++c) {
    const auto chunk_index = static_cast<std::uint64_t>(c);
    if (chunk_index > saturated.load(std::memory_order_relaxed) || timed_out.load(std::memory_order_relaxed)) {
      continue;
    }
    if (expired(deadline)) {
      timed_out.store(true);
      continue;
    }
    const std::uint64_t begin = chunk_index * plan.size;
    const std::uint64_t len = std::min(plan.size, plan.total - begin);
    VertexMask mask = subsets::colex_unrank(begin, k, n);
    Scored local;
    for (std::uint64_t i = 0; i < len; ++i) {
      const int s = score(mask);
      if (s > local.score) {
        local = {mask, s};
        if (s >= ceiling) {
          lower_to(saturated, chunk_index);
          break;
        }
      }
      if (i + 1 < len) mask = subsets::next_same_popcount(mask);
    }
    best[chunk_index] = local;
  }
  if (timed_out.load()) throw BudgetExceeded();

  Scored result;
  const std::uint64_t last = std::min(saturated.load(), plan.count - 1);
  for (std::uint64_t c = 0; c <= last; ++c) {
    if (best[c].score > result.score) result = best[c];
  }
  if (result.score < 0) return std::nullopt;
  return result;
}

}  // namespace kernel
}  // namespace tough
