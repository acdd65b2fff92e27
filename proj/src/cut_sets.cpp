#include "beilc/cut_sets.hpp"

#include <algorithm>

#include "beilc/errors.hpp"

namespace beilc {

namespace {

// Adding v back to G minus S lowers the component count iff v touches at
// least two of those components.
bool every_vertex_reconnects(const Graph& g, VertexSet s, const std::vector<VertexSet>& components) {
  for (Vertex v : s) {
    std::size_t touched = 0;
    VertexSet nb = g.neighbors(v);
    for (VertexSet c : components) {
      if (nb.intersects(c) && ++touched >= 2) break;
    }
    if (touched < 2) return false;
  }
  return true;
}

void sort_cut_sets(std::vector<CutSet>& out) {
  std::sort(out.begin(), out.end(), [](const CutSet& a, const CutSet& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
}

}  // namespace

bool is_cut_set(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  return every_vertex_reconnects(g, s, connected_components(g, s));
}

std::vector<CutSet> cut_sets(const Graph& g, std::size_t max_n) {
  const std::size_t n = g.n();
  if (n > max_n) {
    throw BoundExceeded("cut-set enumeration over 2^" + std::to_string(n) + " subsets exceeds the bound n <= " +
                        std::to_string(max_n) + "; use the closed-form path or raise the bound");
  }
  std::vector<CutSet> out;
  const std::uint64_t limit = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    VertexSet s(bits);
    auto components = connected_components(g, s);
    if (s.empty() || every_vertex_reconnects(g, s, components)) out.push_back({s, components.size()});
    if (bits == limit - 1) break;
  }
  sort_cut_sets(out);
  return out;
}

std::vector<CutSet> cut_sets_girth5(const Graph& g) {
  if (auto failure = girth5_assumption_failure(g)) {
    throw PreconditionError("closed-form cut sets need girth >= 5, no universal vertex, an edge and n >= 4: " +
                            *failure);
  }
  const VertexSet all = g.vertices();
  // The complement is connected, and every nonempty cut set leaves exactly two components.
  std::vector<CutSet> out{{VertexSet{}, 1}};
  for (Vertex v : core_subgraph(g).vertices) out.push_back({all - g.closed_neighborhood(v), 2});
  for (Edge e : free_edges(g)) out.push_back({all - VertexSet{e.u, e.v}, 2});
  sort_cut_sets(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace beilc
