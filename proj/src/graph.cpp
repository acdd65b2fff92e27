#include "beilc/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace beilc {

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adjacency_(n) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  if (n > kMaxVertices) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVertices) + " vertices are supported");
  }
  for (Edge e : edges) {
    Vertex a = std::min(e.u, e.v);
    Vertex b = std::max(e.u, e.v);
    if (a < 1 || b > n) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} has a vertex outside 1.." + std::to_string(n));
    }
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    if (adjacency_[a - 1].contains(b)) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    adjacency_[a - 1].insert(b);
    adjacency_[b - 1].insert(a);
    edges_.push_back({a, b});
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 1; i < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

Graph Graph::cycle(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 1; i < n; ++i) es.push_back({i, i + 1});
  es.push_back({1, static_cast<Vertex>(n)});
  return Graph(n, es);
}

Graph Graph::complete(std::size_t n) { return complement(Graph(n)); }

Graph Graph::star(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 2; i <= n; ++i) es.push_back({1, i});
  return Graph(n, es);
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  auto shift = static_cast<Vertex>(a.n());
  for (Edge e : b.edges()) es.push_back({e.u + shift, e.v + shift});
  return Graph(a.n() + b.n(), es);
}

Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (Vertex i = 1; i <= g.n(); ++i) {
    for (Vertex j = i + 1; j <= g.n(); ++j) {
      if (!g.has_edge(i, j)) es.push_back({i, j});
    }
  }
  return Graph(g.n(), es);
}

std::string to_string(Girth g) { return g.is_infinite() ? "inf" : std::to_string(g.length()); }

Girth girth(const Graph& g) {
  // BFS from every root; a non-tree edge (u,w) closes a cycle of length
  // dist[u] + dist[w] + 1, and the minimum over all roots is attained exactly.
  std::size_t best = Girth::kInfinite;
  const std::size_t n = g.n();
  std::vector<std::size_t> dist(n + 1);
  std::vector<Vertex> parent(n + 1);
  for (Vertex root = 1; root <= n; ++root) {
    std::fill(dist.begin(), dist.end(), Girth::kInfinite);
    dist[root] = 0;
    parent[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == Girth::kInfinite) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return Girth(best);
}

CoreSubgraph core_subgraph(const Graph& g) {
  VertexSet core;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (g.degree(v) >= 2) core.insert(v);
  }
  std::vector<Edge> es;
  for (Edge e : g.edges()) {
    if (core.contains(e.u) && core.contains(e.v)) es.push_back(e);
  }
  return {core, Graph(g.n(), es)};
}

std::vector<Edge> free_edges(const Graph& g) {
  std::vector<Edge> out;
  for (Edge e : g.edges()) {
    if (g.degree(e.u) == 1 && g.degree(e.v) == 1) out.push_back(e);
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    VertexSet component{rest.min()};
    VertexSet frontier = component;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = (next & rest) - component;
      component |= next;
      frontier = next;
    }
    out.push_back(component);
    rest -= component;
  }
  return out;
}

std::optional<Vertex> universal_vertex(const Graph& g) {
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (g.degree(v) + 1 == g.n()) return v;
  }
  return std::nullopt;
}

bool is_star(const Graph& g) { return universal_vertex(g).has_value() && g.edge_count() + 1 == g.n(); }

std::optional<std::string> girth5_assumption_failure(const Graph& g) {
  Girth gi = girth(g);
  if (gi < 5) return "girth " + to_string(gi) + " < 5";
  if (g.edge_count() == 0) return std::string("graph has no edges");
  if (g.n() < 4) return "n = " + std::to_string(g.n()) + " < 4";
  if (auto u = universal_vertex(g)) return "vertex " + std::to_string(*u) + " is universal";
  return std::nullopt;
}

}  // namespace beilc
