#include <doctest.h>

#include <random>

#include "beilc/corpus.hpp"
#include "beilc/cut_sets.hpp"
#include "beilc/errors.hpp"
#include "oracles/cut_set_definition.hpp"
#include "oracles/figures.hpp"

using namespace beilc;

namespace {

std::vector<std::vector<Vertex>> as_lists(const std::vector<CutSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) out.push_back(s.vertices.to_vector());
  std::sort(out.begin(), out.end());
  return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> edges;
  const auto density = rng() % 100;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (rng() % 100 < density) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

}  // namespace

TEST_SUITE("cut_sets") {

TEST_CASE("small examples") {
  auto p4 = cut_sets(Graph::path(4));
  CHECK(as_lists(p4) == std::vector<std::vector<Vertex>>{{}, {2}, {3}});
  CHECK(cut_sets(Graph::complete(5)).size() == 1);
  auto star = cut_sets(Graph::star(4));
  REQUIRE(star.size() == 2);
  CHECK(star[1].vertices == VertexSet{1});
  CHECK(star[1].component_count == 3);
}

TEST_CASE("agrees with the textbook definition on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    Graph g = random_graph(rng, n);
    auto expected = oracle::cut_sets_by_definition(g);
    std::sort(expected.begin(), expected.end());
    CHECK(as_lists(cut_sets(g)) == expected);
  }
}

TEST_CASE("component counts are those of G minus S") {
  Graph g = oracle::eight_vertex_example();
  for (const auto& s : cut_sets(g)) CHECK(s.component_count == connected_components(g, s.vertices).size());
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(cut_sets(Graph::path(10), 9), BoundExceeded);
  CHECK_NOTHROW(cut_sets(Graph::path(10), 10));
}

TEST_CASE("complement cut sets of girth-5 graphs follow the neighbourhood description") {
  for (std::size_t n = 4; n <= 8; ++n) {
    for (const Graph& g : general_girth5_graphs(n)) {
      CHECK(cut_sets_girth5(g) == cut_sets(complement(g)));
    }
  }
  // ten-vertex example: the empty set, V minus N[v] for the five core vertices,
  // and V minus {9,10}
  auto sets = cut_sets_girth5(oracle::ten_vertex_example());
  CHECK(sets.size() == 7);
  CHECK_THROWS_AS(cut_sets_girth5(Graph::complete(3)), PreconditionError);
  CHECK_THROWS_AS(cut_sets_girth5(Graph::star(5)), PreconditionError);
}

TEST_CASE("is_cut_set") {
  Graph g = Graph::path(5);
  CHECK(is_cut_set(g, {}));
  CHECK(is_cut_set(g, VertexSet{2, 4}));
  CHECK_FALSE(is_cut_set(g, VertexSet{1}));
  CHECK_FALSE(is_cut_set(g, VertexSet{2, 3}));
}

}
