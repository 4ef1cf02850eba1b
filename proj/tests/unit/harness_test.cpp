#include "oracles.hpp"

#include "toughness/core/errors.hpp"
#include "toughness/core/families.hpp"
#include "toughness/core/formats.hpp"
#include "toughness/harness/enumerate.hpp"
#include "toughness/harness/harness.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace tough;
namespace fam = tough::families;

namespace {

// Smallest upper-triangle code over all n! relabelings.
std::uint64_t brute_canonical(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (Vertex v = 1; v < n; ++v)
      for (Vertex u = 0; u < v; ++u) code = (code << 1) | (g.has_edge(p[u], p[v]) ? 1U : 0U);
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::size_t brute_connected_count(std::size_t n) {
  std::set<std::uint64_t> classes;
  for (std::uint32_t code = 0; code < (1U << (n * (n - 1) / 2)); ++code) {
    const Graph g = oracle::labeled_graph(n, code);
    if (oracle::connected(g)) classes.insert(brute_canonical(g));
  }
  return classes.size();
}

Graph relabel(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(p[e.u], p[e.v]);
  return Graph(g.vertex_count(), edges);
}

CaseVerdict only_case(const VerificationReport& r) {
  REQUIRE(r.cases.size() == 1);
  return r.cases.front();
}

void check_counts(const VerificationReport& r) {
  CHECK(r.passed + r.failed + r.skipped == r.total);
  CHECK(r.total == r.cases.size());
  CHECK(std::is_sorted(r.cases.begin(), r.cases.end(), [](const CaseVerdict& x, const CaseVerdict& y) {
    return std::tie(x.graph6, x.params) < std::tie(y.graph6, y.params);
  }));
}

const std::size_t kAlpha1[] = {1};
const std::size_t kAlpha2[] = {2};

}  // namespace

TEST_CASE("adjacency codes round-trip and follow graph6 bit order") {
  const Graph p4 = fam::path(4);
  CHECK(graph_from_code(4, adjacency_code(p4)) == p4);
  // pairs (0,1) (0,2) (1,2) (0,3) (1,3) (2,3): edges 01, 12, 23
  CHECK(adjacency_code(p4) == 0b101001U);
  CHECK(adjacency_code(Graph(1)) == 0);
}

TEST_CASE("canonical code is a relabeling invariant") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= kCanonicalMax; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = oracle::random_graph(rng, n, 0.45);
      std::vector<Vertex> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(canonical_code(g) == canonical_code(relabel(g, p)));
    }
  }
  CHECK(canonical_code(fam::path(4)) != canonical_code(fam::star(3)));
  CHECK_THROWS_AS(canonical_code(Graph(12)), SizeCapError);
}

TEST_CASE("canonical code separates exactly the isomorphism classes of the brute-force oracle") {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::map<std::uint64_t, std::uint64_t> fast_to_brute;
    std::map<std::uint64_t, std::uint64_t> brute_to_fast;
    for (std::uint32_t code = 0; code < (1U << (n * (n - 1) / 2)); ++code) {
      const Graph g = oracle::labeled_graph(n, code);
      const std::uint64_t fast = canonical_code(g);
      const std::uint64_t brute = brute_canonical(g);
      CHECK(fast_to_brute.emplace(fast, brute).first->second == brute);
      CHECK(brute_to_fast.emplace(brute, fast).first->second == fast);
    }
  }
}

TEST_CASE("connected graph counts") {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (std::size_t n = 1; n <= kEnumerationMax; ++n) {
    CAPTURE(n);
    CHECK(connected_graphs(n).size() == expected[n - 1]);
  }
}

TEST_CASE("enumerator agrees with brute-force isomorphism classes") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(connected_graphs(n).size() == brute_connected_count(n));
  }
}

TEST_CASE("enumerated graphs are connected, canonical and pairwise non-isomorphic") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::uint64_t> seen;
    for (const Graph& g : connected_graphs(n)) {
      CHECK(g.vertex_count() == n);
      CHECK(oracle::connected(g));
      CHECK(adjacency_code(g) == canonical_code(g));
      CHECK(seen.insert(canonical_code(g)).second);
    }
  }
  CHECK(connected_graphs(1).front() == Graph(1));
  CHECK(connected_graphs_between(1, 4).size() == 10);
  CHECK_THROWS_AS(connected_graphs(0), DomainError);
  CHECK_THROWS_AS(connected_graphs(9), DomainError);
}

TEST_CASE("reduction-min1tough examples") {
  const Graph k3 = fam::complete(3);
  const CaseVerdict k3_case = only_case(verify_reduction_min1tough(std::span(&k3, 1), kAlpha1));
  CHECK(k3_case.status == CaseStatus::Passed);
  CHECK(k3_case.left == true);
  CHECK(k3_case.right == true);

  const Graph c4 = fam::cycle(4);
  const CaseVerdict c4_case = only_case(verify_reduction_min1tough(std::span(&c4, 1), kAlpha2));
  CHECK(c4_case.status == CaseStatus::Passed);
  CHECK(c4_case.left == false);
  CHECK(c4_case.right == false);

  const VerificationReport small = verify_reduction_min1tough(3, kAlpha1);
  check_counts(small);
  CHECK(small.total == 4);
  CHECK(small.passed == 3);
  CHECK(small.failed == 0);
  CHECK(small.skipped == 1);
  const auto k1 = std::find_if(small.cases.begin(), small.cases.end(),
                               [](const CaseVerdict& c) { return c.status == CaseStatus::Skipped; });
  REQUIRE(k1 != small.cases.end());
  CHECK(k1->graph6 == "@");
  CHECK(k1->note == "edgeless host");

  CHECK_THROWS_AS(verify_reduction_min1tough(6, kAlpha1), DomainError);
}

TEST_CASE("reduction-min1tough n <= 4, alpha 1 and 2") {
  const std::size_t alphas[] = {1, 2};
  const VerificationReport r = verify_reduction_min1tough(4, alphas);
  check_counts(r);
  CHECK(r.total == 20);
  CHECK(r.failed == 0);
  CHECK(r.skipped == 2);
}

TEST_CASE("reduction-min-t-tough examples and agreement with t = 1") {
  const Graph k3 = fam::complete(3);
  const CaseVerdict k3_case = only_case(verify_reduction_min_t_tough(2, std::span(&k3, 1), kAlpha1));
  CHECK(k3_case.status == CaseStatus::Passed);
  CHECK(k3_case.right == true);

  const Graph p3 = fam::path(3);
  const CaseVerdict p3_case = only_case(verify_reduction_min_t_tough(2, std::span(&p3, 1), kAlpha1));
  CHECK(p3_case.status == CaseStatus::Passed);
  CHECK(p3_case.left == false);
  CHECK(p3_case.right == false);

  const Graph k2 = fam::complete(2);
  CHECK(only_case(verify_reduction_min_t_tough(3, std::span(&k2, 1), kAlpha1)).note ==
        "host has fewer than t vertices");

  const std::size_t alphas[] = {1, 2};
  const VerificationReport one = verify_reduction_min1tough(3, alphas);
  const VerificationReport t1 = verify_reduction_min_t_tough(1, 3, alphas);
  REQUIRE(one.cases.size() == t1.cases.size());
  for (std::size_t i = 0; i < one.cases.size(); ++i) {
    CHECK(one.cases[i].graph6 == t1.cases[i].graph6);
    CHECK(one.cases[i].left == t1.cases[i].left);
    CHECK(one.cases[i].right == t1.cases[i].right);
    CHECK(one.cases[i].status == t1.cases[i].status);
  }
}

TEST_CASE("reduction-one-over-b examples") {
  const Graph c4 = fam::cycle(4);
  const CaseVerdict c4_case = only_case(verify_reduction_one_over_b(2, std::span(&c4, 1)));
  CHECK(c4_case.left == true);
  CHECK(c4_case.right == true);

  const Graph k3 = fam::complete(3);
  const CaseVerdict k3_case = only_case(verify_reduction_one_over_b(3, std::span(&k3, 1)));
  CHECK(k3_case.left == true);
  CHECK(k3_case.right == true);

  const Graph p4 = fam::path(4);
  const CaseVerdict p4_case = only_case(verify_reduction_one_over_b(2, std::span(&p4, 1)));
  CHECK(p4_case.left == false);
  CHECK(p4_case.right == false);
  CHECK(p4_case.status == CaseStatus::Passed);

  const VerificationReport r = verify_reduction_one_over_b(2, 5);
  check_counts(r);
  CHECK(r.total == 31);
  CHECK(r.failed == 0);
  CHECK(r.skipped == 1);

  CHECK_THROWS_AS(verify_reduction_one_over_b(1, 3), DomainError);
}

TEST_CASE("reduction-a-over-b examples") {
  const Graph c5 = fam::cycle(5);
  const CaseVerdict c5_case = only_case(verify_reduction_a_over_b(1, 3, std::span(&c5, 1)));
  CHECK(c5_case.left == true);
  CHECK(c5_case.right == true);

  const Graph p3 = fam::path(3);
  const CaseVerdict p3_case = only_case(verify_reduction_a_over_b(1, 3, std::span(&p3, 1)));
  CHECK(p3_case.left == false);
  CHECK(p3_case.right == false);

  const Graph k3 = fam::complete(3);
  const CaseVerdict k3_case = only_case(verify_reduction_a_over_b(2, 5, std::span(&k3, 1)));
  CHECK(k3_case.left == true);
  CHECK(k3_case.right == true);

  const VerificationReport r = verify_reduction_a_over_b(2, 5, 3);
  check_counts(r);
  CHECK(r.failed == 0);
}

TEST_CASE("lemma-g-alpha-tough") {
  const Graph p4 = fam::path(4);
  const CaseVerdict yes = only_case(verify_lemma_G_alpha_tough(std::span(&p4, 1), kAlpha2));
  CHECK(yes.status == CaseStatus::Passed);
  CHECK(yes.right == true);
  CHECK(!yes.left);

  const CaseVerdict vacuous = only_case(verify_lemma_G_alpha_tough(std::span(&p4, 1), kAlpha1));
  CHECK(vacuous.status == CaseStatus::Skipped);
  CHECK(vacuous.note == "hypothesis fails: alpha(G)=2");

  const Graph k3 = fam::complete(3);
  CHECK(only_case(verify_lemma_G_alpha_tough(std::span(&k3, 1), kAlpha2)).status == CaseStatus::Passed);
  CHECK(only_case(verify_lemma_G_alpha_tough(std::span(&k3, 1), kAlpha1, 2)).status == CaseStatus::Passed);
}

TEST_CASE("blowup-alpha-critical") {
  const Graph bases[] = {fam::cycle(5), fam::cycle(7), fam::path(3)};
  const VerificationReport r = verify_blowup_alpha_critical(bases, 2);
  check_counts(r);
  CHECK(r.total == 5 * 2 + 7 * 2 + 1);
  CHECK(r.passed == 24);
  CHECK(r.skipped == 1);
  CHECK(r.failed == 0);

  const Graph c7 = fam::cycle(7);
  const VerificationReport big = verify_blowup_alpha_critical(std::span(&c7, 1), 7);
  CHECK(big.failed == 0);
  CHECK(big.skipped == 7);  // size 7 gives 13 vertices
}

TEST_CASE("structural invariants") {
  const VerificationReport r = verify_structural_invariants(5);
  check_counts(r);
  CHECK(r.failed == 0);
  // 31 graphs plus one gap case for each n in 3..5 that has a noncomplete graph
  CHECK(r.total == 31 + 3);
  CHECK(r.skipped == 0);

  const auto gap5 = std::find_if(r.cases.begin(), r.cases.end(),
                                 [](const CaseVerdict& c) { return c.params == "gap=n=5"; });
  REQUIRE(gap5 != r.cases.end());
  CHECK(gap5->status == CaseStatus::Passed);

  const Graph square = fam::cycle(4);
  const VerificationReport one = verify_structural_invariants(std::span(&square, 1));
  REQUIRE(one.cases.size() == 2);
  CHECK(one.cases[1].graph6 == "Cl");
  CHECK(one.cases[1].note == "tau=1/1;minimally 1-tough");
  CHECK(one.cases[0].note == "fewer than two distinct values");
}

TEST_CASE("structural sweep skips disconnected stream input") {
  const Graph graphs[] = {Graph(2), fam::cycle(4)};
  const VerificationReport r = verify_structural_invariants(graphs);
  check_counts(r);
  CHECK(r.skipped == 1);
  CHECK(r.failed == 0);
  CHECK(r.passed == 2);
}

TEST_CASE("time budget turns a slow case into a skip") {
  SweepLimits limits;
  limits.time_budget = std::chrono::milliseconds(0);
  const Graph c5 = fam::cycle(5);
  const CaseVerdict c = only_case(verify_reduction_min1tough(std::span(&c5, 1), kAlpha2, limits));
  CHECK(c.status == CaseStatus::Skipped);
  CHECK(c.note == "time budget exceeded");
}

TEST_CASE("vertex cap skips oversized gadgets") {
  SweepLimits limits;
  limits.vertex_cap = 10;
  const Graph k3 = fam::complete(3);
  const CaseVerdict c = only_case(verify_reduction_one_over_b(4, std::span(&k3, 1), limits));
  CHECK(c.status == CaseStatus::Skipped);
  CHECK(c.note == "gadget has 12 vertices, cap 10");
}

TEST_CASE("reports are deterministic and serialize") {
  SweepSpec spec;
  spec.check = "reduction-one-over-b";
  spec.n_max = 4;
  spec.b = 2;
  const VerificationReport a = run_sweep(spec);
  const VerificationReport b = run_sweep(spec);
  CHECK(report_to_json(a, false).dump() == report_to_json(b, false).dump());
  const auto j = report_to_json(a);
  CHECK(j["checkName"] == "reduction-one-over-b");
  CHECK(j["totalGraphs"] == 10);
  CHECK(j["params"]["nMax"] == 4);
  CHECK(j["failures"].empty());
  CHECK(j.contains("wallTime"));
  CHECK(!report_to_json(a, false).contains("wallTime"));
  const std::string csv = report_to_csv(a);
  CHECK(csv.rfind("graph6,params,left,right,status,note\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
  CHECK(csv.find("@,b=2,,,skipped,edgeless host\n") != std::string::npos);
}

TEST_CASE("run_sweep validates the spec") {
  SweepSpec spec;
  spec.check = "no-such-check";
  spec.n_max = 3;
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
  spec.check = "structural";
  spec.n_max = 8;
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
  spec.n_max = 4;
  spec.n_min = 5;
  CHECK_THROWS_AS(run_sweep(spec), DomainError);

  spec.check = "reduction-min-t-tough";
  spec.t = 2;
  spec.n_min = 3;
  spec.n_max = 3;
  const VerificationReport r = run_sweep(spec);
  CHECK(r.total == 2);
  CHECK(r.failed == 0);

  spec.check = "blowup-alpha-critical";
  spec.size_max = 3;
  const VerificationReport blow = run_sweep(spec);
  CHECK(blow.total == 5 * 3 + 7 * 3);
  CHECK(blow.failed == 0);
}

TEST_CASE("failed cases are listed by graph6") {
  VerificationReport r;
  r.cases = {{"A_", "", true, false, CaseStatus::Failed, "x"},
             {"A_", "b=3", true, false, CaseStatus::Failed, "x"},
             {"Bw", "", true, true, CaseStatus::Passed, ""}};
  CHECK(r.failed_graph6() == std::vector<std::string>{"A_"});
}
