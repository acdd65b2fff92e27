#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beilc/vertex_set.hpp"

namespace beilc {

struct Edge {
  Vertex u;  // u < v
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph on the vertices 1..n.
class Graph {
 public:
  /// Throws std::invalid_argument on self-loops, duplicate edges, or labels outside 1..n.
  Graph(std::size_t n, const std::vector<Edge>& edges);
  explicit Graph(std::size_t n) : Graph(n, {}) {}

  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph complete(std::size_t n);
  static Graph star(std::size_t n);  // centre 1
  /// Vertex-disjoint union; vertices of b are shifted by a.n().
  static Graph disjoint_union(const Graph& a, const Graph& b);

  std::size_t n() const { return adjacency_.size(); }
  VertexSet vertices() const { return VertexSet::range(n()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(Vertex a, Vertex b) const { return adjacency_[a - 1].contains(b); }
  VertexSet neighbors(Vertex v) const { return adjacency_[v - 1]; }
  VertexSet closed_neighborhood(Vertex v) const {
    VertexSet s = adjacency_[v - 1];
    s.insert(v);
    return s;
  }
  std::size_t degree(Vertex v) const { return adjacency_[v - 1].size(); }

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && n() == other.n(); }

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;  // sorted
};

enum class GraphFormat { EdgeList, Graph6 };

/// Edge-list text: first non-blank line "n", then one "i j" pair per line.
/// Blank lines and '#' comments are ignored. Throws ParseError with the line number.
Graph parse_graph(std::string_view text, GraphFormat format);
/// Picks Graph6 unless the first non-blank line is all digits.
GraphFormat detect_format(std::string_view text);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

Graph complement(const Graph& g);

/// Cycle length, or infinity for forests. Infinity compares above every length.
class Girth {
 public:
  static constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

  constexpr Girth() = default;
  constexpr explicit Girth(std::size_t length) : length_(length) {}
  static constexpr Girth infinite() { return Girth(); }

  constexpr bool is_infinite() const { return length_ == kInfinite; }
  constexpr std::size_t length() const { return length_; }
  constexpr auto operator<=>(const Girth&) const = default;
  constexpr bool operator<(std::size_t k) const { return length_ < k; }
  constexpr bool operator>=(std::size_t k) const { return length_ >= k; }

 private:
  std::size_t length_ = kInfinite;
};

std::string to_string(Girth g);

Girth girth(const Graph& g);

/// The graph H obtained by deleting leaves and isolated vertices, kept on the
/// original labels (deleted vertices simply carry no edges).
struct CoreSubgraph {
  VertexSet vertices;
  Graph graph;
};
CoreSubgraph core_subgraph(const Graph& g);

/// Edges that form a whole connected component.
std::vector<Edge> free_edges(const Graph& g);

/// Components of g minus `removed`, ordered by minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet removed = {});

/// Some vertex adjacent to every other vertex, if any.
std::optional<Vertex> universal_vertex(const Graph& g);

/// Connected with a vertex adjacent to all others; K1 and K2 count.
bool is_star(const Graph& g);

/// Checks girth >= 5, no universal vertex, at least one edge, n >= 4.
/// Returns the first violated assumption, or nullopt if all hold.
std::optional<std::string> girth5_assumption_failure(const Graph& g);

}  // namespace beilc
