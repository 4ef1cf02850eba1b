#include "toughness/harness/harness.hpp"

#include "toughness/core/errors.hpp"
#include "toughness/core/families.hpp"
#include "toughness/core/formats.hpp"
#include "toughness/core/operations.hpp"
#include "toughness/gadgets/gadgets.hpp"
#include "toughness/harness/enumerate.hpp"
#include "toughness/recognizers/recognizers.hpp"
#include "toughness/solver/independence.hpp"
#include "toughness/solver/parallel.hpp"
#include "toughness/solver/toughness.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace tough {
namespace {

using Clock = std::chrono::steady_clock;

inline constexpr std::size_t kMin1ToughNMax = 5;
inline constexpr std::size_t kStructuralNMax = 7;

std::string join_params(std::initializer_list<std::pair<const char*, std::string>> items) {
  std::string out;
  for (const auto& [key, value] : items) {
    if (!out.empty()) out += ';';
    out += key;
    out += '=';
    out += value;
  }
  return out;
}

std::string num(std::size_t v) { return std::to_string(v); }

class CaseRunner {
 public:
  CaseRunner(const Graph& g, std::string params) {
    verdict_.graph6 = to_graph6(g);
    verdict_.params = std::move(params);
  }

  CaseVerdict skip(std::string note) && {
    verdict_.status = CaseStatus::Skipped;
    verdict_.note = std::move(note);
    return std::move(verdict_);
  }

  // fn fills left/right and may set a note; the verdict is Passed iff the
  // sides agree (or, for one-sided checks, right is true). Exceptions become
  // failures, an expired budget a skip.
  template <class Fn>
  CaseVerdict run(const SweepLimits& limits, Fn&& fn) && {
    try {
      std::optional<ScopedDeadline> deadline;
      if (limits.time_budget) deadline.emplace(*limits.time_budget);
      fn(verdict_);
    } catch (const BudgetExceeded&) {
      verdict_.left.reset();
      verdict_.right.reset();
      return std::move(*this).skip("time budget exceeded");
    } catch (const std::exception& e) {
      verdict_.status = CaseStatus::Failed;
      verdict_.note = e.what();
      return std::move(verdict_);
    }
    if (verdict_.status != CaseStatus::Failed) {
      const bool ok = verdict_.left ? verdict_.left == verdict_.right : verdict_.right.value_or(false);
      verdict_.status = ok ? CaseStatus::Passed : CaseStatus::Failed;
      if (!ok && verdict_.note.empty()) {
        verdict_.note = "sides disagree: left=" + std::string(verdict_.left.value_or(false) ? "true" : "false") +
                        " right=" + (verdict_.right.value_or(false) ? "true" : "false");
      }
    }
    return std::move(verdict_);
  }

 private:
  CaseVerdict verdict_;
};

std::optional<std::string> host_problem(const Graph& g) {
  if (g.vertex_count() == 0) return "empty graph";
  if (!is_connected(g)) return "disconnected host";
  if (g.edge_count() == 0) return "edgeless host";
  return std::nullopt;
}

std::string over_cap(std::size_t size, std::size_t cap) {
  return "gadget has " + num(size) + " vertices, cap " + num(cap);
}

VerificationReport finish(std::string name, nlohmann::ordered_json params, std::vector<CaseVerdict> cases,
                          Clock::time_point start) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.params = std::move(params);
  std::sort(cases.begin(), cases.end(), [](const CaseVerdict& x, const CaseVerdict& y) {
    return std::tie(x.graph6, x.params) < std::tie(y.graph6, y.params);
  });
  for (const CaseVerdict& c : cases) {
    switch (c.status) {
      case CaseStatus::Passed: ++r.passed; break;
      case CaseStatus::Failed: ++r.failed; break;
      case CaseStatus::Skipped: ++r.skipped; break;
    }
  }
  r.total = cases.size();
  r.cases = std::move(cases);
  r.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

bool alpha_side(const Graph& g, std::size_t alpha) {
  return independence_number(g).alpha == alpha && is_alpha_critical_graph(g);
}

void require_n_max(const char* check, std::size_t n_max, std::size_t cap) {
  if (n_max < 1 || n_max > cap) {
    throw DomainError(std::string(check) + ": n_max must be in 1.." + num(cap));
  }
}

void require_alphas(std::span<const std::size_t> alphas) {
  if (alphas.empty()) throw DomainError("at least one alpha is required");
  for (std::size_t a : alphas) {
    if (a < 1) throw DomainError("alpha must be positive");
  }
}

nlohmann::ordered_json with_n_max(nlohmann::ordered_json params, std::size_t n_max) {
  nlohmann::ordered_json out = {{"nMax", n_max}};
  for (auto& [key, value] : params.items()) out[key] = value;
  return out;
}

VerificationReport reduction_t(const char* name, std::size_t t, std::span<const Graph> hosts,
                               std::span<const std::size_t> alphas, const SweepLimits& limits) {
  if (t < 1) throw DomainError("t must be a positive integer");
  require_alphas(alphas);
  const auto start = Clock::now();
  const Rational target(static_cast<std::int64_t>(t));
  std::vector<CaseVerdict> cases;
  for (const Graph& g : hosts) {
    const std::size_t n = g.vertex_count();
    for (std::size_t alpha : alphas) {
      std::string params = t == 1 && std::string_view(name) == "reduction-min1tough"
                               ? join_params({{"alpha", num(alpha)}})
                               : join_params({{"t", num(t)}, {"alpha", num(alpha)}});
      CaseRunner runner(g, std::move(params));
      const std::size_t size = 2 * n * t * alpha + t * alpha;
      if (auto problem = host_problem(g)) {
        cases.push_back(std::move(runner).skip(*problem));
      } else if (n < t) {
        cases.push_back(std::move(runner).skip("host has fewer than t vertices"));
      } else if (size > limits.vertex_cap) {
        cases.push_back(std::move(runner).skip(over_cap(size, limits.vertex_cap)));
      } else {
        cases.push_back(std::move(runner).run(limits, [&](CaseVerdict& v) {
          v.left = alpha_side(g, alpha);
          const Gadget gadget = t == 1 ? build_G_alpha(g, alpha) : build_G_t_alpha(g, t, alpha);
          v.right = is_minimally_t_tough(gadget.graph, target).minimal;
        }));
      }
    }
  }
  nlohmann::ordered_json params = {{"alpha", std::vector<std::size_t>(alphas.begin(), alphas.end())}};
  if (std::string_view(name) != "reduction-min1tough") params = {{"t", t}, {"alpha", params["alpha"]}};
  params["vertexCap"] = limits.vertex_cap;
  return finish(name, std::move(params), std::move(cases), start);
}

struct StructuralFacts {
  std::optional<Rational> tau;
  std::size_t n = 0;
};

// Returns an empty string when every sub-check holds, otherwise the failures.
std::string structural_failures(const Graph& g, StructuralFacts& facts, std::string& info) {
  std::vector<std::string> bad;
  const std::size_t n = g.vertex_count();
  facts.n = n;

  const ToughnessResult r = toughness(g);
  if (is_complete(g)) {
    if (r.value.kind() != ToughnessValue::Kind::Infinite) bad.push_back("complete graph with finite toughness");
    info = "tau=inf";
  } else {
    const Rational& tau = r.value.value();
    facts.tau = tau;
    info = "tau=" + tau.to_string();
    const BigInt bound(n - 1);
    if (tau.numerator() < 1 || tau.numerator() > bound || tau.denominator() > bound) {
      bad.push_back("toughness " + tau.to_string() + " outside 1 <= a,b <= n-1");
    }
    if (!r.witness || make_witness(g, r.witness->removed) != *r.witness || r.witness->ratio != tau ||
        r.witness->component_count < 2) {
      bad.push_back("invalid tough-set witness");
    }
    if (toughness_via_decision(g).value != r.value) bad.push_back("decision route disagrees");
    if (reference::toughness_exhaustive(g).value != r.value) bad.push_back("serial oracle disagrees");
    if (!has_toughness_via_separator(g, tau)) bad.push_back("separator pair rejects the value");

    for (const Rational& t : {Rational(1), Rational(1, 2)}) {
      const MinToughResult m = is_minimally_t_tough(g, t);
      if (!m.minimal) continue;
      info += t == Rational(1) ? ";minimally 1-tough" : ";minimally 1/2-tough";
      for (const EdgeWitness& entry : m.certificate->edges) {
        const EdgeWitness w = edge_witness(g, t, entry.edge);
        if (!edge_witness_holds(g, t, w) || w.bridge != is_bridge(g, entry.edge) || entry.bridge != w.bridge) {
          bad.push_back("edge witness fails at t=" + t.to_string());
          break;
        }
      }
    }
  }

  if (n >= 2 && n <= kAlmostMinimalCheckCap) {
    const AlmostMinimalViews views = almost_minimal_views(g);
    if (!views.agree()) bad.push_back("almost-minimal characterizations disagree");
    const bool classified = is_almost_minimally_1_tough(g) != AlmostMinClass::NotAlmostMinimal;
    if (classified != views.by_definition) bad.push_back("classifier disagrees with the definition");
  }

  std::string out;
  for (const std::string& s : bad) out += (out.empty() ? "" : "; ") + s;
  return out;
}

}  // namespace

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Passed: return "passed";
    case CaseStatus::Failed: return "failed";
    case CaseStatus::Skipped: return "skipped";
  }
  return "";
}

std::vector<std::string> VerificationReport::failed_graph6() const {
  std::vector<std::string> out;
  for (const CaseVerdict& c : cases) {
    if (c.status == CaseStatus::Failed && (out.empty() || out.back() != c.graph6)) out.push_back(c.graph6);
  }
  return out;
}

nlohmann::ordered_json report_to_json(const VerificationReport& r, bool include_wall_time) {
  nlohmann::ordered_json j;
  j["checkName"] = r.check_name;
  j["params"] = r.params;
  j["totalGraphs"] = r.total;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["skipped"] = r.skipped;
  j["failures"] = r.failed_graph6();
  auto& cases = j["cases"] = nlohmann::ordered_json::array();
  for (const CaseVerdict& c : r.cases) {
    nlohmann::ordered_json e;
    e["graph6"] = c.graph6;
    e["params"] = c.params;
    e["left"] = c.left ? nlohmann::ordered_json(*c.left) : nullptr;
    e["right"] = c.right ? nlohmann::ordered_json(*c.right) : nullptr;
    e["status"] = to_string(c.status);
    e["note"] = c.note;
    cases.push_back(std::move(e));
  }
  if (include_wall_time) j["wallTime"] = r.wall_time_seconds;
  return j;
}

std::string report_to_csv(const VerificationReport& r) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  auto side = [](const std::optional<bool>& b) -> std::string { return b ? (*b ? "true" : "false") : ""; };
  std::ostringstream out;
  out << "graph6,params,left,right,status,note\n";
  for (const CaseVerdict& c : r.cases) {
    out << field(c.graph6) << ',' << field(c.params) << ',' << side(c.left) << ',' << side(c.right) << ','
        << to_string(c.status) << ',' << field(c.note) << '\n';
  }
  return out.str();
}

VerificationReport verify_reduction_min1tough(std::span<const Graph> hosts, std::span<const std::size_t> alphas,
                                              const SweepLimits& limits) {
  return reduction_t("reduction-min1tough", 1, hosts, alphas, limits);
}

VerificationReport verify_reduction_min1tough(std::size_t n_max, std::span<const std::size_t> alphas,
                                              const SweepLimits& limits) {
  require_n_max("reduction-min1tough", n_max, kMin1ToughNMax);
  const std::vector<Graph> hosts = connected_graphs_between(1, n_max);
  VerificationReport r = verify_reduction_min1tough(hosts, alphas, limits);
  r.params = with_n_max(r.params, n_max);
  return r;
}

VerificationReport verify_reduction_min_t_tough(std::size_t t, std::span<const Graph> hosts,
                                                std::span<const std::size_t> alphas, const SweepLimits& limits) {
  return reduction_t("reduction-min-t-tough", t, hosts, alphas, limits);
}

VerificationReport verify_reduction_min_t_tough(std::size_t t, std::size_t n_max, std::span<const std::size_t> alphas,
                                                const SweepLimits& limits) {
  require_n_max("reduction-min-t-tough", n_max, kEnumerationMax);
  const std::vector<Graph> hosts = connected_graphs_between(1, n_max);
  VerificationReport r = verify_reduction_min_t_tough(t, hosts, alphas, limits);
  r.params = with_n_max(r.params, n_max);
  return r;
}

VerificationReport verify_reduction_one_over_b(std::size_t b, std::span<const Graph> hosts,
                                               const SweepLimits& limits) {
  if (b < 2) throw DomainError("reduction-one-over-b: b must be at least 2");
  const auto start = Clock::now();
  const Rational t(1, static_cast<std::int64_t>(b));
  std::vector<CaseVerdict> cases;
  for (const Graph& g : hosts) {
    CaseRunner runner(g, join_params({{"b", num(b)}}));
    const std::size_t size = g.vertex_count() * b;
    if (auto problem = host_problem(g)) {
      cases.push_back(std::move(runner).skip(*problem));
    } else if (size > limits.vertex_cap) {
      cases.push_back(std::move(runner).skip(over_cap(size, limits.vertex_cap)));
    } else {
      cases.push_back(std::move(runner).run(limits, [&](CaseVerdict& v) {
        v.left = is_almost_minimally_1_tough(g) != AlmostMinClass::NotAlmostMinimal;
        v.right = is_minimally_t_tough(attach_pendants(g, b).graph, t).minimal;
      }));
    }
  }
  return finish("reduction-one-over-b", {{"b", b}, {"vertexCap", limits.vertex_cap}}, std::move(cases), start);
}

VerificationReport verify_reduction_one_over_b(std::size_t b, std::size_t n_max, const SweepLimits& limits) {
  require_n_max("reduction-one-over-b", n_max, kEnumerationMax);
  const std::vector<Graph> hosts = connected_graphs_between(1, n_max);
  VerificationReport r = verify_reduction_one_over_b(b, hosts, limits);
  r.params = with_n_max(r.params, n_max);
  return r;
}

VerificationReport verify_reduction_a_over_b(std::size_t a, std::size_t b, std::span<const Graph> hosts,
                                             const SweepLimits& limits) {
  const auto start = Clock::now();
  const HPrime h_prime = build_H_prime(a, b);
  const Vertex u = glue_point(h_prime.gadget);
  const Rational t(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
  const std::size_t h_size = h_prime.gadget.graph.vertex_count();
  std::vector<CaseVerdict> cases;
  for (const Graph& g : hosts) {
    CaseRunner runner(g, join_params({{"t", t.to_string()}}));
    const std::size_t size = g.vertex_count() * (h_size - 1);
    if (auto problem = host_problem(g)) {
      cases.push_back(std::move(runner).skip(*problem));
    } else if (size > limits.vertex_cap) {
      cases.push_back(std::move(runner).skip(over_cap(size, limits.vertex_cap)));
    } else {
      cases.push_back(std::move(runner).run(limits, [&](CaseVerdict& v) {
        v.left = is_almost_minimally_1_tough(g) != AlmostMinClass::NotAlmostMinimal;
        v.right = is_minimally_t_tough(glue(g, h_prime.gadget.graph, u).graph, t).minimal;
      }));
    }
  }
  return finish("reduction-a-over-b",
                {{"a", a}, {"b", b}, {"gluePoint", u}, {"vertexCap", limits.vertex_cap}},
                std::move(cases), start);
}

VerificationReport verify_reduction_a_over_b(std::size_t a, std::size_t b, std::size_t n_max,
                                             const SweepLimits& limits) {
  require_n_max("reduction-a-over-b", n_max, kEnumerationMax);
  const std::vector<Graph> hosts = connected_graphs_between(1, n_max);
  VerificationReport r = verify_reduction_a_over_b(a, b, hosts, limits);
  r.params = with_n_max(r.params, n_max);
  return r;
}

VerificationReport verify_lemma_G_alpha_tough(std::span<const Graph> hosts, std::span<const std::size_t> alphas,
                                              std::size_t t, const SweepLimits& limits) {
  if (t < 1) throw DomainError("t must be a positive integer");
  require_alphas(alphas);
  const auto start = Clock::now();
  const Rational target(static_cast<std::int64_t>(t));
  std::vector<CaseVerdict> cases;
  for (const Graph& g : hosts) {
    const std::size_t n = g.vertex_count();
    for (std::size_t alpha : alphas) {
      CaseRunner runner(g, join_params({{"t", num(t)}, {"alpha", num(alpha)}}));
      const std::size_t size = 2 * n * t * alpha + t * alpha;
      if (auto problem = host_problem(g)) {
        cases.push_back(std::move(runner).skip(*problem));
        continue;
      }
      const std::size_t host_alpha = independence_number(g).alpha;
      if (host_alpha > alpha) {
        cases.push_back(std::move(runner).skip("hypothesis fails: alpha(G)=" + num(host_alpha)));
      } else if (n < t) {
        cases.push_back(std::move(runner).skip("host has fewer than t vertices"));
      } else if (size > limits.vertex_cap) {
        cases.push_back(std::move(runner).skip(over_cap(size, limits.vertex_cap)));
      } else {
        cases.push_back(std::move(runner).run(limits, [&](CaseVerdict& v) {
          const Gadget gadget = t == 1 ? build_G_alpha(g, alpha) : build_G_t_alpha(g, t, alpha);
          v.right = is_t_tough(gadget.graph, target).tough;
        }));
      }
    }
  }
  return finish("lemma-g-alpha-tough",
                {{"t", t},
                 {"alpha", std::vector<std::size_t>(alphas.begin(), alphas.end())},
                 {"vertexCap", limits.vertex_cap}},
                std::move(cases), start);
}

VerificationReport verify_lemma_G_alpha_tough(std::size_t n_max, std::span<const std::size_t> alphas,
                                              std::size_t t, const SweepLimits& limits) {
  require_n_max("lemma-g-alpha-tough", n_max, kEnumerationMax);
  const std::vector<Graph> hosts = connected_graphs_between(1, n_max);
  VerificationReport r = verify_lemma_G_alpha_tough(hosts, alphas, t, limits);
  r.params = with_n_max(r.params, n_max);
  return r;
}

VerificationReport verify_blowup_alpha_critical(std::span<const Graph> bases, std::size_t size_max,
                                                const SweepLimits& limits) {
  if (size_max < 1) throw DomainError("blowup-alpha-critical: size_max must be positive");
  const auto start = Clock::now();
  std::vector<CaseVerdict> cases;
  for (const Graph& base : bases) {
    if (base.vertex_count() == 0 || !is_alpha_critical_graph(base)) {
      cases.push_back(CaseRunner(base, "").skip("base not alpha-critical"));
      continue;
    }
    for (Vertex v = 0; v < base.vertex_count(); ++v) {
      for (std::size_t size = 1; size <= size_max; ++size) {
        CaseRunner runner(base, join_params({{"v", num(v)}, {"size", num(size)}}));
        const std::size_t n = base.vertex_count() + size - 1;
        if (n > kBlowupCap) {
          cases.push_back(std::move(runner).skip("blown-up graph has " + num(n) + " vertices, cap " + num(kBlowupCap)));
          continue;
        }
        cases.push_back(std::move(runner).run(limits, [&](CaseVerdict& c) {
          c.left = true;
          c.right = is_alpha_critical_graph(blow_up(base, v, size));
        }));
      }
    }
  }
  return finish("blowup-alpha-critical", {{"sizeMax", size_max}, {"bases", bases.size()}}, std::move(cases), start);
}

VerificationReport verify_structural_invariants(std::span<const Graph> graphs, const SweepLimits& limits) {
  const auto start = Clock::now();
  std::vector<CaseVerdict> cases;
  std::map<std::size_t, std::vector<std::pair<Rational, std::string>>> values;
  for (const Graph& g : graphs) {
    CaseRunner runner(g, "");
    if (g.vertex_count() == 0 || !is_connected(g)) {
      cases.push_back(std::move(runner).skip("disconnected input"));
      continue;
    }
    if (g.vertex_count() > limits.vertex_cap) {
      cases.push_back(std::move(runner).skip(over_cap(g.vertex_count(), limits.vertex_cap)));
      continue;
    }
    StructuralFacts facts;
    CaseVerdict v = std::move(runner).run(limits, [&](CaseVerdict& c) {
      std::string info;
      const std::string failures = structural_failures(g, facts, info);
      c.right = failures.empty();
      c.note = failures.empty() ? info : failures;
    });
    if (v.status == CaseStatus::Passed && facts.tau) values[facts.n].emplace_back(*facts.tau, v.graph6);
    cases.push_back(std::move(v));
  }

  // Distinct toughness values of same-order graphs are more than 1/n^2 apart.
  for (auto& [n, list] : values) {
    std::sort(list.begin(), list.end());
    CaseVerdict gap;
    gap.params = join_params({{"gap", "n=" + num(n)}});
    const Rational bound(1, static_cast<std::int64_t>(n * n));
    std::optional<Rational> smallest;
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].first == list[i - 1].first) continue;
      const Rational d = list[i].first - list[i - 1].first;
      if (!smallest || d < *smallest) smallest = d;
      if (!(d > bound) && gap.status != CaseStatus::Failed) {
        gap.status = CaseStatus::Failed;
        gap.graph6 = list[i].second;
        gap.note = "gap " + d.to_string() + " between " + list[i - 1].second + " and " + list[i].second;
      }
    }
    if (gap.status != CaseStatus::Failed) {
      gap.status = CaseStatus::Passed;
      gap.right = true;
      gap.note = smallest ? "min gap " + smallest->to_string() : "fewer than two distinct values";
    } else {
      gap.right = false;
    }
    cases.push_back(std::move(gap));
  }
  return finish("structural", {{"graphs", graphs.size()}}, std::move(cases), start);
}

VerificationReport verify_structural_invariants(std::size_t n_max, const SweepLimits& limits) {
  require_n_max("structural", n_max, kStructuralNMax);
  const std::vector<Graph> graphs = connected_graphs_between(1, n_max);
  VerificationReport r = verify_structural_invariants(graphs, limits);
  r.params = {{"nMax", n_max}};
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "reduction-min1tough", "reduction-min-t-tough", "reduction-one-over-b", "reduction-a-over-b",
      "lemma-g-alpha-tough", "blowup-alpha-critical", "structural"};
  return names;
}

VerificationReport run_sweep(const SweepSpec& spec) {
  const std::string& c = spec.check;
  if (std::find(check_names().begin(), check_names().end(), c) == check_names().end()) {
    throw DomainError("unknown check '" + c + "'");
  }

  if (c == "blowup-alpha-critical") {
    const std::vector<Graph> bases = spec.graphs ? *spec.graphs : std::vector<Graph>{families::cycle(5), families::cycle(7)};
    return verify_blowup_alpha_critical(bases, spec.size_max, spec.limits);
  }

  std::vector<Graph> hosts;
  nlohmann::ordered_json source;
  if (spec.graphs) {
    hosts = *spec.graphs;
    source = {{"source", "stream"}, {"graphs", hosts.size()}};
  } else {
    const std::size_t cap = c == "reduction-min1tough" ? kMin1ToughNMax
                            : c == "structural"        ? kStructuralNMax
                                                       : kEnumerationMax;
    require_n_max(c.c_str(), spec.n_max, cap);
    if (spec.n_min < 1 || spec.n_min > spec.n_max) throw DomainError("n_min must be in 1..n_max");
    hosts = connected_graphs_between(spec.n_min, spec.n_max);
    source = {{"nMin", spec.n_min}, {"nMax", spec.n_max}};
  }

  VerificationReport r;
  if (c == "reduction-min1tough") {
    r = verify_reduction_min1tough(hosts, spec.alphas, spec.limits);
  } else if (c == "reduction-min-t-tough") {
    r = verify_reduction_min_t_tough(spec.t, hosts, spec.alphas, spec.limits);
  } else if (c == "reduction-one-over-b") {
    r = verify_reduction_one_over_b(spec.b, hosts, spec.limits);
  } else if (c == "reduction-a-over-b") {
    r = verify_reduction_a_over_b(spec.a, spec.b, hosts, spec.limits);
  } else if (c == "lemma-g-alpha-tough") {
    r = verify_lemma_G_alpha_tough(hosts, spec.alphas, spec.t, spec.limits);
  } else {
    r = verify_structural_invariants(hosts, spec.limits);
  }
  for (auto& [key, value] : r.params.items()) {
    if (!source.contains(key)) source[key] = value;
  }
  r.params = std::move(source);
  return r;
}

}  // namespace tough
