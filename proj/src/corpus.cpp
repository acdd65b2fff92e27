#include "beilc/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <tuple>

#include "beilc/errors.hpp"
#include "beilc/girth5.hpp"

namespace beilc {

namespace {

// Stable colour refinement started from `colours`; colour ids are ranks of
// label-independent signatures, so they are comparable across the vertices
// of one call.
std::vector<std::size_t> refine(const std::vector<VertexSet>& adj, std::vector<std::size_t> colours) {
  const std::size_t n = adj.size();
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = colours[v];
      for (Vertex w : adj[v]) sig[v].second.push_back(colours[w - 1]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n; ++v) {
      colours[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (sorted.size() == classes) return colours;
    classes = sorted.size();
  }
}

std::vector<VertexSet> adjacency(const Graph& g) {
  std::vector<VertexSet> adj;
  for (Vertex v = 1; v <= g.n(); ++v) adj.push_back(g.neighbors(v));
  return adj;
}

using Invariant = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;

Invariant invariant(const Graph& g) {
  auto colours = refine(adjacency(g), std::vector<std::size_t>(g.n(), 0));
  std::vector<std::size_t> degrees;
  for (Vertex v = 1; v <= g.n(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  std::vector<std::size_t> class_sizes(g.n(), 0);
  for (std::size_t c : colours) ++class_sizes[c];
  std::sort(class_sizes.begin(), class_sizes.end());
  return {g.edge_count(), degrees, class_sizes};
}

bool extend_map(const Graph& a, const Graph& b, const std::vector<Vertex>& order, std::size_t depth,
                const std::vector<std::size_t>& ca, const std::vector<std::size_t>& cb, std::vector<Vertex>& image,
                VertexSet& used) {
  if (depth == order.size()) return true;
  const Vertex v = order[depth];
  for (Vertex w = 1; w <= b.n(); ++w) {
    if (used.contains(w) || ca[v - 1] != cb[w - 1]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const Vertex u = order[k];
      ok = a.has_edge(u, v) == b.has_edge(image[u - 1], w);
    }
    if (!ok) continue;
    image[v - 1] = w;
    used.insert(w);
    if (extend_map(a, b, order, depth + 1, ca, cb, image, used)) return true;
    used.erase(w);
  }
  return false;
}

// Vertices with distance >= 3 from each other in g: admissible neighbourhoods
// of a new vertex that keep the girth at least 5.
void spread_sets(const Graph& g, Vertex next, VertexSet chosen, VertexSet blocked, std::vector<VertexSet>& out) {
  if (next > g.n()) {
    out.push_back(chosen);
    return;
  }
  spread_sets(g, next + 1, chosen, blocked, out);
  if (blocked.contains(next)) return;
  VertexSet ball = g.closed_neighborhood(next);
  for (Vertex w : g.neighbors(next)) ball = ball | g.neighbors(w);
  chosen.insert(next);
  spread_sets(g, next + 1, chosen, blocked | ball, out);
}

Graph with_new_vertex(const Graph& g, VertexSet neighbours) {
  std::vector<Edge> edges = g.edges();
  const auto v = static_cast<Vertex>(g.n() + 1);
  for (Vertex u : neighbours) edges.push_back({u, v});
  return Graph(g.n() + 1, edges);
}

std::size_t distance(const Graph& g, Vertex from, Vertex to) {
  VertexSet seen{from};
  VertexSet frontier{from};
  for (std::size_t d = 0; !frontier.empty(); ++d) {
    if (frontier.contains(to)) return d;
    VertexSet next;
    for (Vertex v : frontier) next = next | g.neighbors(v);
    frontier = next - seen;
    seen = seen | next;
  }
  return g.n() + 1;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  const std::size_t n = a.n();
  // Refine the disjoint union so colours mean the same thing on both sides.
  std::vector<VertexSet> adj = adjacency(a);
  for (Vertex v = 1; v <= n; ++v) {
    VertexSet shifted;
    for (Vertex w : b.neighbors(v)) shifted.insert(static_cast<Vertex>(w + n));
    adj.push_back(shifted);
  }
  if (2 * n > kMaxVertices) throw BoundExceeded("isomorphism test limited to 32 vertices");
  auto colours = refine(adj, std::vector<std::size_t>(2 * n, 0));
  std::vector<std::size_t> ca(colours.begin(), colours.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::size_t> cb(colours.begin() + static_cast<std::ptrdiff_t>(n), colours.end());
  auto ha = ca;
  auto hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;

  // Visit a's vertices in BFS order so each new vertex has mapped neighbours.
  std::vector<Vertex> order;
  VertexSet placed;
  for (Vertex root = 1; root <= n; ++root) {
    if (placed.contains(root)) continue;
    std::vector<Vertex> queue{root};
    placed.insert(root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      order.push_back(queue[i]);
      for (Vertex w : a.neighbors(queue[i]) - placed) {
        placed.insert(w);
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> image(n, 0);
  VertexSet used;
  return extend_map(a, b, order, 0, ca, cb, image, used);
}

std::vector<Graph> girth5_graphs(std::size_t n) {
  if (n > kMaxExhaustiveN) {
    throw BoundExceeded("exhaustive enumeration supports n <= " + std::to_string(kMaxExhaustiveN));
  }
  if (n == 0) return {};
  std::vector<Graph> level{Graph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<Invariant, std::vector<std::size_t>> buckets;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      std::vector<VertexSet> choices;
      spread_sets(g, 1, {}, {}, choices);
      for (VertexSet s : choices) {
        Graph h = with_new_vertex(g, s);
        auto& bucket = buckets[invariant(h)];
        bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) { return isomorphic(next[i], h); });
        if (!seen) {
          bucket.push_back(next.size());
          next.push_back(std::move(h));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> general_girth5_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (Graph& g : girth5_graphs(n)) {
    if (classify(g).classification == Girth5Class::General) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> random_general_girth5_graphs(std::size_t count, std::size_t nmin, std::size_t nmax,
                                                std::uint64_t seed) {
  if (nmin < 4 || nmax < nmin || nmax > kMaxVertices) {
    throw PreconditionError("random corpus needs 4 <= nmin <= nmax <= " + std::to_string(kMaxVertices));
  }
  // mt19937_64 is fully specified; draws use plain modulo so results do not
  // depend on the standard library's distribution implementations.
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return rng() % bound; };
  std::vector<Graph> out;
  std::size_t turn = 0;
  while (out.size() < count) {
    const std::size_t n = nmin + turn % (nmax - nmin + 1);
    std::vector<Edge> pairs;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) pairs.push_back({u, v});
    }
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[draw(i)]);
    const std::uint64_t keep_percent = 1 + draw(100);
    Graph g(n);
    for (Edge e : pairs) {
      if (draw(100) >= keep_percent) continue;
      if (distance(g, e.u, e.v) >= 4) {
        std::vector<Edge> edges = g.edges();
        edges.push_back(e);
        g = Graph(n, edges);
      }
    }
    if (classify(g).classification == Girth5Class::General) {
      out.push_back(std::move(g));
      ++turn;
    }
  }
  return out;
}

}  // namespace beilc
