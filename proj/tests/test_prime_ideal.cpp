#include <doctest.h>

#include <random>

#include "beilc/prime_ideal.hpp"
#include "oracles/variety.hpp"

using namespace beilc;

namespace {

PrimeIdeal random_prime(std::mt19937_64& rng, std::size_t n) {
  VertexSet killed;
  std::vector<VertexSet> blocks(n);
  for (Vertex v = 1; v <= n; ++v) {
    const auto slot = rng() % (n + 2);
    if (slot == n) {
      killed.insert(v);
    } else if (slot < n) {
      blocks[slot].insert(v);
    }
  }
  return PrimeIdeal(n, killed, blocks);
}

}  // namespace

TEST_SUITE("prime_ideal") {

TEST_CASE("canonical form and printing") {
  PrimeIdeal q(5, VertexSet{2, 5}, {VertexSet{3, 4, 1}, VertexSet{}});
  CHECK(q.to_string() == "(x,y:2,5)+J(K{1,3,4})");
  CHECK(PrimeIdeal(3, {}, {VertexSet{1}}).to_string() == "0");
  CHECK(PrimeIdeal(4, {}, {VertexSet{3, 4}, VertexSet{1, 2}}) == PrimeIdeal(4, {}, {VertexSet{1, 2}, VertexSet{3, 4}}));
  CHECK_THROWS_AS(PrimeIdeal(4, VertexSet{1}, {VertexSet{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PrimeIdeal(4, {}, {VertexSet{1, 2}, VertexSet{2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(PrimeIdeal(4, VertexSet{5}, {}), std::invalid_argument);
}

TEST_CASE("dimension and regularity") {
  CHECK(PrimeIdeal::complete(4, VertexSet::range(4)).dimension() == 5);
  CHECK(PrimeIdeal::maximal(6).dimension() == 0);
  CHECK(PrimeIdeal(5, VertexSet{1}, {VertexSet{2, 3}}).dimension() == 3 + 4);
  CHECK(PrimeIdeal(6, {}, {VertexSet{1, 2}, VertexSet{3, 4, 5}}).regularity() == 2);
  CHECK(PrimeIdeal::maximal(3).regularity() == 0);
}

TEST_CASE("dim R/P_S = n - |S| + c(S)") {
  for (const Graph& g : {Graph::path(6), Graph::cycle(6), Graph::star(5), Graph::complete(4)}) {
    for (const auto& s : cut_sets(g)) {
      CHECK(prime_from_cut_set(g, s).dimension() == g.n() - s.vertices.size() + s.component_count);
    }
  }
}

TEST_CASE("minimal primes of small graphs") {
  auto p4 = associated_primes(Graph::path(4));
  REQUIRE(p4.size() == 3);
  CHECK(std::find(p4.begin(), p4.end(), PrimeIdeal::complete(4, VertexSet::range(4))) != p4.end());
  CHECK(std::find(p4.begin(), p4.end(), PrimeIdeal(4, VertexSet{2}, {VertexSet{3, 4}})) != p4.end());
  CHECK(associated_primes(Graph::complete(5)).size() == 1);
  CHECK(associated_primes(Graph(3)).front().to_string() == "0");
}

TEST_CASE("containment agrees with point sets over F_3") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    PrimeIdeal a = random_prime(rng, n);
    PrimeIdeal b = random_prime(rng, n);
    bool subset = true;  // V(a) inside V(b)
    oracle::for_each_point(n, 3, [&](const oracle::Point& pt) {
      if (oracle::vanishes_on(a, pt, 3) && !oracle::vanishes_on(b, pt, 3)) subset = false;
    });
    CHECK(a.contains(b) == subset);
  }
}

TEST_CASE("sum decomposition examples") {
  PrimeIdeal a = PrimeIdeal::complete(5, VertexSet{1, 2, 3});
  PrimeIdeal b = PrimeIdeal::complete(5, VertexSet{3, 4, 5});
  auto parts = sum_decompose(a, b);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == PrimeIdeal::complete(5, VertexSet::range(5)));
  CHECK(parts[1] == PrimeIdeal(5, VertexSet{3}, {VertexSet{1, 2}, VertexSet{4, 5}}));
  CHECK(sum_decompose(a, a) == std::vector<PrimeIdeal>{a});
  CHECK(sum_decompose(a, PrimeIdeal::maximal(5)) == std::vector<PrimeIdeal>{PrimeIdeal::maximal(5)});
}

TEST_CASE("sum decomposition matches the variety of the sum over F_2 and F_3") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    PrimeIdeal a = random_prime(rng, n);
    PrimeIdeal b = random_prime(rng, n);
    auto parts = sum_decompose(a, b);
    CHECK(oracle::covers_variety(a, b, parts, 2));
    CHECK(oracle::covers_variety(a, b, parts, 3));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      CHECK((oracle::has_private_point(parts, i, 2) || oracle::has_private_point(parts, i, 3)));
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (i != j) CHECK_FALSE(parts[i].contains(parts[j]));
      }
    }
  }
}

}
