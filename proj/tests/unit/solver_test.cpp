#include "toughness/core/errors.hpp"
#include "toughness/core/families.hpp"
#include "toughness/core/operations.hpp"
#include "toughness/solver/independence.hpp"
#include "toughness/solver/parallel.hpp"
#include "toughness/solver/toughness.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace tough;
namespace fam = tough::families;

namespace {

Rational q(long a, long b) { return Rational(BigInt(a), BigInt(b)); }

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

// Every labeled graph on n vertices, indexed by its upper-triangle bit pattern.
Graph labeled_graph(std::size_t n, std::uint32_t code) {
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++bit)
      if ((code >> bit) & 1U) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace

TEST_SUITE("is_t_tough") {
  TEST_CASE("complete graphs are t-tough for every t") {
    CHECK(is_t_tough(fam::complete(5), Rational(100)).tough);
    CHECK(is_t_tough(fam::complete(1), Rational(7)).tough);
    CHECK(is_t_tough(fam::complete(2), Rational(7)).tough);
  }

  TEST_CASE("C4 at 1 and just above 1") {
    CHECK(is_t_tough(fam::cycle(4), Rational(1)).tough);
    const TToughResult r = is_t_tough(fam::cycle(4), q(17, 16));
    REQUIRE_FALSE(r.tough);
    CHECK(r.violation->removed == 0b0101);
    CHECK(r.violation->component_count == 2);
    CHECK(*r.violation->ratio == Rational(1));
  }

  TEST_CASE("disconnected graphs fail with the empty set") {
    const TToughResult r = is_t_tough(Graph(4, {{0, 1}, {2, 3}}), q(1, 2));
    REQUIRE_FALSE(r.tough);
    CHECK(r.violation->removed == 0);
    CHECK(r.violation->component_count == 2);
    CHECK_FALSE(r.violation->ratio.has_value());
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(is_t_tough(Graph(0), Rational(1)), DomainError);
    CHECK_THROWS_AS(is_t_tough(fam::path(3), Rational(0)), DomainError);
    CHECK_THROWS_AS(is_t_tough(fam::path(65), Rational(1)), SizeCapError);
  }

  TEST_CASE("huge t is handled exactly") {
    CHECK_FALSE(is_t_tough(fam::cycle(5), Rational::parse("1000000000000000000000000/3")).tough);
    CHECK(is_t_tough(fam::cycle(5), Rational::parse("1/1000000000000000000000000")).tough);
  }
}

TEST_SUITE("toughness") {
  TEST_CASE("known values") {
    const ToughnessResult p4 = toughness(fam::path(4));
    CHECK(p4.value == q(1, 2));
    REQUIRE(p4.witness);
    CHECK(p4.witness->removed == 0b0010);
    CHECK(p4.witness->component_count == 2);

    CHECK(toughness(fam::petersen()).value == q(4, 3));
    CHECK(toughness(fam::complete(1)).value == ToughnessValue::infinite());
    CHECK(toughness(fam::complete(2)).value == ToughnessValue::infinite());
    CHECK(toughness(Graph(3, {{0, 1}})).value == ToughnessValue::zero());
    CHECK_FALSE(toughness(Graph(3, {{0, 1}})).witness);
    CHECK_THROWS_AS(toughness(Graph(0)), DomainError);
  }

  TEST_CASE("Petersen value agrees with the serial oracle") {
    CHECK(reference::toughness_exhaustive(fam::petersen()).value == q(4, 3));
  }

  TEST_CASE("toughness_via_decision") {
    CHECK(toughness_via_decision(fam::cycle(6)).value == Rational(1));
    const ToughnessResult star = toughness_via_decision(fam::star(3));
    CHECK(star.value == q(1, 3));
    CHECK(star.witness->removed == 0b0001);
    CHECK_THROWS_AS(toughness_via_decision(fam::complete(4)), DomainError);
    CHECK_THROWS_AS(toughness_via_decision(Graph(3)), DomainError);
  }

  TEST_CASE("value ordering: Zero < Finite < Infinite") {
    CHECK(ToughnessValue::zero() < ToughnessValue::finite(q(1, 9)));
    CHECK(ToughnessValue::finite(q(1, 9)) < ToughnessValue::finite(q(1, 8)));
    CHECK(ToughnessValue::finite(Rational(9)) < ToughnessValue::infinite());
    CHECK(ToughnessValue::infinite() > Rational(1000));
    CHECK(ToughnessValue::zero() < q(1, 1000));
    CHECK(ToughnessValue::finite(q(2, 4)).to_string() == "1/2");
  }

  TEST_CASE("candidate ratios") {
    const auto c = candidate_ratios(4);
    // a, b in {1,2,3}, reduced: 1/3 1/2 2/3 1 3/2 2 3
    CHECK(c.size() == 7);
    CHECK(c.front() == q(1, 3));
    CHECK(c.back() == Rational(3));
  }
}

TEST_SUITE("kernel vs serial oracle") {
  TEST_CASE("all labeled graphs on up to 5 vertices") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::uint32_t code = 0; code < (1U << (n * (n - 1) / 2)); ++code) {
        const Graph g = labeled_graph(n, code);
        const ToughnessResult fast = toughness(g);
        const ToughnessResult slow = reference::toughness_exhaustive(g);
        REQUIRE(fast.value == slow.value);
        REQUIRE(fast.witness == slow.witness);
        for (const Rational& t : {q(1, 3), q(1, 2), Rational(1), q(3, 2)}) {
          const TToughResult a = is_t_tough(g, t);
          const TToughResult b = reference::is_t_tough_exhaustive(g, t);
          REQUIRE(a.tough == b.tough);
          REQUIRE(a.violation == b.violation);
        }
      }
    }
  }

  TEST_CASE("random graphs up to 14 vertices") {
    std::mt19937_64 rng(0x3c6ef372);
    for (int i = 0; i < 120; ++i) {
      const std::size_t n = 6 + rng() % 9;
      const Graph g = random_graph(rng, n, 0.2 + 0.6 * ((rng() % 100) / 100.0));
      const ToughnessResult fast = toughness(g);
      const ToughnessResult slow = reference::toughness_exhaustive(g);
      REQUIRE(fast.value == slow.value);
      REQUIRE(fast.witness == slow.witness);
      const Rational t = q(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 5));
      const TToughResult a = is_t_tough(g, t);
      const TToughResult b = reference::is_t_tough_exhaustive(g, t);
      REQUIRE(a.tough == b.tough);
      REQUIRE(a.violation == b.violation);
    }
  }
}

TEST_SUITE("solver invariants") {
  TEST_CASE("Prop 2.1 bounds, witness validity, decision route and edge monotonicity on random graphs") {
    std::mt19937_64 rng(0xa54ff53a);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 2 + rng() % 8;
      const Graph g = random_graph(rng, n, 0.3 + 0.5 * ((rng() % 100) / 100.0));
      const ToughnessResult r = toughness(g);
      if (r.value.is_finite()) {
        const Rational& tau = r.value.value();
        CHECK(tau.numerator() >= 1);
        CHECK(tau.numerator() <= n - 1);
        CHECK(tau.denominator() >= 1);
        CHECK(tau.denominator() <= n - 1);
        REQUIRE(r.witness);
        CHECK(components_after_removal(g, r.witness->removed) == r.witness->component_count);
        CHECK(r.witness->component_count >= 2);
        CHECK(*r.witness->ratio == tau);
        const ToughnessResult d = toughness_via_decision(g);
        CHECK(d.value == r.value);
        CHECK(d.witness == r.witness);
        CHECK(has_toughness_via_separator(g, tau));
        CHECK(find_cutset_with_ratio(g, tau) == r.witness);
      }
      for (const Edge& e : g.edges()) CHECK(toughness(delete_edge(g, e)).value <= r.value);
    }
  }

  TEST_CASE("separator rejects values that are not the toughness") {
    CHECK_FALSE(has_toughness_via_separator(fam::cycle(5), q(1, 2)));
    CHECK_FALSE(has_toughness_via_separator(fam::cycle(5), q(1, 1) + q(1, 30)));
    CHECK(has_toughness_via_separator(fam::cycle(5), Rational(1)));
    CHECK_FALSE(has_toughness_via_separator(fam::complete(4), Rational(1)));
  }
}

TEST_SUITE("parallel kernel") {
  TEST_CASE("witnesses do not depend on the worker count") {
    const Graph g = fam::cycle(20);
    set_worker_count(1);
    const ToughnessResult one = toughness(g);
    const TToughResult one_d = is_t_tough(g, q(11, 10));
    set_worker_count(4);
    const ToughnessResult four = toughness(g);
    const TToughResult four_d = is_t_tough(g, q(11, 10));
    set_worker_count(0);
    CHECK(one.witness == four.witness);
    CHECK(one_d.violation == four_d.violation);
    CHECK(one.value == Rational(1));
  }

  TEST_CASE("an expired deadline aborts the scan") {
    ScopedDeadline deadline(std::chrono::nanoseconds(0));
    std::this_thread::sleep_for(std::chrono::milliseconds(1));
    CHECK_THROWS_AS(toughness(fam::cycle(24)), BudgetExceeded);
  }

  TEST_CASE("colex unranking matches Gosper enumeration") {
    for (std::size_t n : {1U, 5U, 9U}) {
      for (std::size_t k = 1; k <= n; ++k) {
        VertexMask mask = subsets::colex_unrank(0, k, n);
        for (std::uint64_t r = 0; r < subsets::binomial(n, k); ++r) {
          REQUIRE(subsets::colex_unrank(r, k, n) == mask);
          REQUIRE(subsets::colex_rank(mask) == r);
          if (r + 1 < subsets::binomial(n, k)) mask = subsets::next_same_popcount(mask);
        }
      }
    }
  }
}

TEST_SUITE("independence number") {
  TEST_CASE("small cases") {
    CHECK(independence_number(fam::cycle(5)).alpha == 2);
    CHECK(independence_number(fam::complete(6)).alpha == 1);
    CHECK(independence_number(Graph(7)).alpha == 7);
    CHECK(independence_number(Graph(0)).alpha == 0);
    CHECK(independence_number(fam::petersen()).alpha == 4);
    CHECK(reference::independence_number_exhaustive(fam::cycle(5)).alpha == 2);
  }

  TEST_CASE("branch and bound agrees with the exhaustive oracle") {
    std::mt19937_64 rng(0x510e527f);
    for (int i = 0; i < 300; ++i) {
      const std::size_t n = 1 + rng() % 22;
      const Graph g = random_graph(rng, n, 0.05 + 0.9 * ((rng() % 100) / 100.0));
      const IndependenceResult fast = independence_number(g);
      REQUIRE(fast.alpha == reference::independence_number_exhaustive(g).alpha);
      REQUIRE(static_cast<std::size_t>(std::popcount(fast.witness)) == fast.alpha);
      REQUIRE(is_independent(g, fast.witness));
    }
  }

  TEST_CASE("sparse 60-vertex graphs finish") {
    const IndependenceResult r = independence_number(fam::cycle(61 - 1));
    CHECK(r.alpha == 30);
  }
}
