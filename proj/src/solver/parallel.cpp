#include "toughness/solver/parallel.hpp"

namespace tough {
namespace {

thread_local std::optional<std::chrono::steady_clock::time_point> tls_deadline;
int default_workers = 0;

}  // namespace

void set_worker_count(int workers) {
  if (default_workers == 0) default_workers = omp_get_max_threads();
  omp_set_num_threads(workers > 0 ? workers : default_workers);
}

int worker_count() { return omp_get_max_threads(); }

ScopedDeadline::ScopedDeadline(std::chrono::steady_clock::duration budget) : previous_(tls_deadline) {
  const auto candidate = std::chrono::steady_clock::now() + budget;
  tls_deadline = previous_ ? std::min(*previous_, candidate) : candidate;
}

ScopedDeadline::~ScopedDeadline() { tls_deadline = previous_; }

std::optional<std::chrono::steady_clock::time_point> current_deadline() { return tls_deadline; }

}  // namespace tough
