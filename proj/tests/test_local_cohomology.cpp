#include <doctest.h>

#include <algorithm>
#include <random>

#include "beilc/errors.hpp"
#include "beilc/local_cohomology.hpp"
#include "beilc/poset_topology.hpp"
#include "oracles/figures.hpp"

using namespace beilc;

namespace {

const Field kQ = Field::rationals();

Graph random_graph(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (rng() % 2) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

std::size_t summand_count(const LCDecomposition& d) {
  std::size_t total = 0;
  for (const auto& [r, list] : d.modules()) total += list.size();
  return total;
}

}  // namespace

TEST_SUITE("local_cohomology") {

TEST_CASE("P4: interval profiles and the decomposition") {
  // The engine runs on the complement so that the node names of the figure apply.
  const Graph g = Graph::path(4);
  const auto p = build_poset(associated_primes(complement(g)));
  const auto profiles = interval_profiles(p, kQ);
  auto profile_of = [&](const std::string& name) {
    auto i = p.index_of(oracle::ideal_for(g, name));
    REQUIRE(i.has_value());
    return profiles[*i];
  };
  for (const char* name : {"j", "a_2", "a_3"}) CHECK(profile_of(name).nonzero() == std::map<int, std::size_t>{{-1, 1}});
  for (const char* name : {"b_2", "b_3", "c_2_3"}) {
    CHECK(profile_of(name).nonzero() == std::map<int, std::size_t>{{0, 1}});
  }
  CHECK(profile_of("d_2_3").nonzero() == std::map<int, std::size_t>{{1, 1}});

  const auto d = decompose(complement(g), kQ);
  REQUIRE(d.modules().size() == 1);
  REQUIRE(d.modules().count(5) == 1);
  CHECK(d.modules().at(5).size() == 7);
  for (const auto& s : d.modules().at(5)) CHECK(s.multiplicity == 1);
  const auto r = report(d);
  CHECK(r.depth == 5);
  CHECK(r.dimension == 5);
  CHECK(r.cohen_macaulay);
  CHECK(r.regularity == 3);
}

TEST_CASE("complete graphs: a single summand in the top degree") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto d = decompose(Graph::complete(n), kQ);
    REQUIRE(summand_count(d) == 1);
    CHECK(d.modules().count(n + 1) == 1);
    const auto r = report(d);
    CHECK(r.cohen_macaulay);
    CHECK(r.dimension == n + 1);
    CHECK(r.regularity == 1);
  }
}

TEST_CASE("paths are Cohen-Macaulay with regularity m - 1") {
  for (std::size_t m = 2; m <= 7; ++m) {
    const auto r = report(decompose(Graph::path(m), kQ));
    CHECK(r.depth == m + 1);
    CHECK(r.dimension == m + 1);
    CHECK(r.cohen_macaulay);
    CHECK(r.regularity == m - 1);
  }
}

TEST_CASE("cycles: depth n, dimension n + 1, regularity n - 2") {
  for (std::size_t n = 4; n <= 7; ++n) {
    for (unsigned long p : {0UL, 2UL}) {
      const auto r = report(decompose(Graph::cycle(n), Field(p)));
      CHECK(r.depth == n);
      CHECK(r.dimension == n + 1);
      CHECK_FALSE(r.cohen_macaulay);
      CHECK(r.regularity == n - 2);
    }
  }
}

TEST_CASE("the zero ideal") {
  const auto r = report(decompose(Graph(2), kQ));
  CHECK(r.depth == 4);
  CHECK(r.dimension == 4);
  CHECK(r.cohen_macaulay);
  CHECK(r.regularity == 0);
}

TEST_CASE("dimension is the largest n - |S| + c(S)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const Graph g = random_graph(rng, n);
    std::size_t expected = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      VertexSet s;
      for (Vertex v = 1; v <= n; ++v) {
        if (mask >> (v - 1) & 1) s.insert(v);
      }
      if (!is_cut_set(g, s)) continue;
      expected = std::max(expected, n - s.size() + connected_components(g, s).size());
    }
    const auto d = decompose(g, kQ);
    CHECK(d.dimension() == expected);
    CHECK(d.depth() <= d.dimension());
  }
}

TEST_CASE("multiplicities agree with the interval profiles") {
  const Graph g = Graph::cycle(5);
  const auto p = build_poset(associated_primes(g));
  const auto profiles = interval_profiles(p, kQ);
  const auto d = decompose_poset(p, g.n(), kQ);
  for (const auto& [r, list] : d.modules()) {
    for (const auto& s : list) {
      const auto q = *p.index_of(s.ideal);
      const int degree = static_cast<int>(r) - static_cast<int>(s.dimension) - 1;
      CHECK(s.multiplicity == profiles[q].dim(degree));
      CHECK(s.multiplicity == multiplicity(p, q, static_cast<int>(r), kQ));
    }
  }
}

TEST_CASE("cohomological dimension and arithmetic rank bounds") {
  const Graph g = Graph::cycle(5);
  const auto r2 = report(decompose(g, Field(2)));
  REQUIRE(r2.cohomological_dimension.has_value());
  CHECK(*r2.cohomological_dimension == 2 * g.n() - r2.depth);
  REQUIRE(r2.ara.has_value());
  CHECK(*r2.ara == AraBounds{*r2.cohomological_dimension, 2 * g.n()});
  const auto r0 = report(decompose(g, kQ));
  CHECK_FALSE(r0.cohomological_dimension.has_value());
  CHECK_FALSE(r0.ara.has_value());
}

TEST_CASE("decomposition invariants") {
  LCDecomposition d(3, kQ);
  CHECK(d.empty());
  CHECK_THROWS_AS(d.depth(), std::logic_error);
  CHECK_THROWS_AS(report(d), std::logic_error);
  const auto q = PrimeIdeal::complete(3, VertexSet::range(3));
  d.add(4, {q, 4, 0, ""});
  CHECK(d.empty());
  d.add(4, {q, 4, 1, ""});
  CHECK_THROWS(d.add(4, {q, 4, 2, ""}));
  CHECK(d.depth() == 4);
}

TEST_CASE("size guards") {
  EngineLimits tight;
  tight.max_subset_n = 5;
  CHECK_THROWS_AS(decompose(Graph::path(6), kQ, tight), BoundExceeded);
  EngineLimits small_poset;
  small_poset.max_poset_elements = 3;
  CHECK_THROWS_AS(decompose(Graph::cycle(5), kQ, small_poset), BoundExceeded);
}

}
