#pragma once

#include "toughness/core/graph.hpp"
#include "toughness/core/rational.hpp"

#include "json.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tough {

enum class CaseStatus { Passed, Failed, Skipped };

std::string to_string(CaseStatus s);

/// One (graph, parameters) case. left/right are the two sides of the checked
/// statement; a one-sided check leaves right empty.
struct CaseVerdict {
  std::string graph6;
  std::string params;
  std::optional<bool> left;
  std::optional<bool> right;
  CaseStatus status = CaseStatus::Skipped;
  std::string note;

  friend bool operator==(const CaseVerdict&, const CaseVerdict&) = default;
};

struct VerificationReport {
  std::string check_name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  /// Sorted by (graph6, params).
  std::vector<CaseVerdict> cases;
  double wall_time_seconds = 0.0;

  bool clean() const { return failed == 0; }
  std::vector<std::string> failed_graph6() const;
};

struct SweepLimits {
  std::size_t vertex_cap = 24;
  /// Per-case wall-clock budget; an expired case is skipped, not failed.
  std::optional<std::chrono::milliseconds> time_budget;
};

/// {"checkName", "params", "totalGraphs", "passed", "failed", "skipped",
///  "failures": [graph6...], "cases": [...], "wallTime"}.
nlohmann::ordered_json report_to_json(const VerificationReport& r, bool include_wall_time = true);
/// Header plus one row per case: graph6,params,left,right,status,note.
std::string report_to_csv(const VerificationReport& r);

// Every sweep takes an explicit host list (external graph6 streams) or an
// n_max, in which case hosts are the enumerated connected graphs on 1..n_max
// vertices. Edgeless and disconnected hosts and gadgets above the vertex cap
// are counted as skipped with a reason.

/// α-critical with α(G) = α  <=>  G_α minimally 1-tough.
VerificationReport verify_reduction_min1tough(std::span<const Graph> hosts, std::span<const std::size_t> alphas,
                                              const SweepLimits& limits = {});
VerificationReport verify_reduction_min1tough(std::size_t n_max, std::span<const std::size_t> alphas,
                                              const SweepLimits& limits = {});

/// α-critical with α(G) = α  <=>  G_{t,α} minimally t-tough. Hosts with n < t are skipped.
VerificationReport verify_reduction_min_t_tough(std::size_t t, std::span<const Graph> hosts,
                                                std::span<const std::size_t> alphas, const SweepLimits& limits = {});
VerificationReport verify_reduction_min_t_tough(std::size_t t, std::size_t n_max, std::span<const std::size_t> alphas,
                                                const SweepLimits& limits = {});

/// Almost minimally 1-tough  <=>  pendant gadget minimally 1/b-tough.
VerificationReport verify_reduction_one_over_b(std::size_t b, std::span<const Graph> hosts,
                                               const SweepLimits& limits = {});
VerificationReport verify_reduction_one_over_b(std::size_t b, std::size_t n_max, const SweepLimits& limits = {});

/// Almost minimally 1-tough  <=>  G glued with H'_{a/b} minimally a/b-tough.
VerificationReport verify_reduction_a_over_b(std::size_t a, std::size_t b, std::span<const Graph> hosts,
                                             const SweepLimits& limits = {});
VerificationReport verify_reduction_a_over_b(std::size_t a, std::size_t b, std::size_t n_max,
                                             const SweepLimits& limits = {});

/// α(G) <= α  =>  G_{t,α} is t-tough. Hosts failing the hypothesis are skipped.
VerificationReport verify_lemma_G_alpha_tough(std::span<const Graph> hosts, std::span<const std::size_t> alphas,
                                              std::size_t t = 1, const SweepLimits& limits = {});
VerificationReport verify_lemma_G_alpha_tough(std::size_t n_max, std::span<const std::size_t> alphas,
                                              std::size_t t = 1, const SweepLimits& limits = {});

inline constexpr std::size_t kBlowupCap = 12;

/// Every blow-up of every vertex of an α-critical base by a clique of size
/// 1..size_max stays α-critical. Non-critical bases are skipped.
VerificationReport verify_blowup_alpha_critical(std::span<const Graph> bases, std::size_t size_max,
                                                const SweepLimits& limits = {});

/// Per graph: toughness bounds and witness, decision-route agreement,
/// edge-witness certificates of minimally 1- and 1/2-tough graphs, the
/// almost-minimal trichotomy. Per n: the gap between distinct toughness values.
VerificationReport verify_structural_invariants(std::span<const Graph> graphs, const SweepLimits& limits = {});
VerificationReport verify_structural_invariants(std::size_t n_max, const SweepLimits& limits = {});

/// Check names accepted by run_sweep, in display order.
const std::vector<std::string>& check_names();

struct SweepSpec {
  std::string check;
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  /// Replaces enumeration when set (a graph6 stream).
  std::optional<std::vector<Graph>> graphs;
  std::vector<std::size_t> alphas{1};
  std::size_t t = 1;
  std::size_t a = 1;
  std::size_t b = 2;
  std::size_t size_max = 2;
  SweepLimits limits;
};

/// Dispatches on spec.check. Throws DomainError for an unknown name or a cap violation.
VerificationReport run_sweep(const SweepSpec& spec);

}  // namespace tough
