#include "beilc/girth5.hpp"

#include <algorithm>
#include <map>

#include "beilc/errors.hpp"

namespace beilc {

namespace {

std::string edge_tag(const char* kind, Edge e) {
  return std::string(kind) + "_" + std::to_string(e.u) + "_" + std::to_string(e.v);
}

std::string vertex_tag(const char* kind, Vertex v) { return std::string(kind) + "_" + std::to_string(v); }

void require_general(const Girth5Input& c, const char* what) {
  if (c.classification != Girth5Class::General) {
    std::string reason = girth5_assumption_failure(c.graph).value_or("classified " + to_string(c.classification));
    throw PreconditionError(std::string(what) + " needs a general girth-5 input: " + reason);
  }
}

// A single vertex and the empty graph count as stars.
bool core_is_star(const CoreSubgraph& h) {
  if (h.vertices.size() <= 1) return true;
  return std::any_of(h.vertices.begin(), h.vertices.end(), [&](Vertex c) {
    return (h.vertices - VertexSet{c}).is_subset_of(h.graph.neighbors(c));
  });
}

struct Ideals {
  const Graph& g;
  VertexSet all;

  PrimeIdeal j() const { return PrimeIdeal::complete(g.n(), all); }
  PrimeIdeal a(Vertex v) const { return PrimeIdeal(g.n(), all - g.closed_neighborhood(v), {g.neighbors(v)}); }
  PrimeIdeal b(Vertex v) const {
    return PrimeIdeal(g.n(), all - g.closed_neighborhood(v), {g.closed_neighborhood(v)});
  }
  // a'_{vw} and c_{vw} share this form; so do b'_{vw} and d_{vw}.
  PrimeIdeal pair_killed(Edge e) const { return PrimeIdeal(g.n(), all - VertexSet{e.u, e.v}, {}); }
  PrimeIdeal pair_block(Edge e) const { return PrimeIdeal(g.n(), all - VertexSet{e.u, e.v}, {VertexSet{e.u, e.v}}); }
  PrimeIdeal e(Vertex v) const { return PrimeIdeal(g.n(), all - VertexSet{v}, {}); }
};

bool has_maximal_ideal(const std::vector<Edge>& free, const CoreSubgraph& h) {
  return free.size() >= 2 || (!h.vertices.empty() && (!free.empty() || !core_is_star(h)));
}

}  // namespace

std::string to_string(Girth5Class c) {
  switch (c) {
    case Girth5Class::NoEdges: return "no-edges";
    case Girth5Class::Star: return "star";
    case Girth5Class::SmallN: return "small-n";
    case Girth5Class::General: return "general";
    case Girth5Class::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

Girth5Input classify(const Graph& g) {
  Girth5Class c = Girth5Class::General;
  if (girth(g) < 5) {
    c = Girth5Class::Inapplicable;
  } else if (g.edge_count() == 0) {
    c = Girth5Class::NoEdges;
  } else if (g.n() <= 3) {
    c = Girth5Class::SmallN;
  } else if (universal_vertex(g)) {
    c = Girth5Class::Star;
  }
  return {g, c};
}

HomologicalReport trivial_report(const Girth5Input& c, Field field) {
  const Graph& g = c.graph;
  const std::size_t n = g.n();
  HomologicalReport r;
  r.cohen_macaulay = true;
  switch (c.classification) {
    case Girth5Class::NoEdges:
      // J(K_n); for n = 1 the ideal is zero and R has regularity 0.
      r.dimension = n + 1;
      r.regularity = n >= 2 ? 1 : 0;
      break;
    case Girth5Class::Star:
      // complement is K_{n-1} + K1
      r.dimension = n + 2;
      r.regularity = 1;
      break;
    case Girth5Class::SmallN:
      if (n == 2) {
        // K2: complement 2K1, J = 0
        r.dimension = 4;
        r.regularity = 0;
      } else if (universal_vertex(g)) {
        // P3: complement K2 + K1
        r.dimension = n + 2;
        r.regularity = 1;
      } else {
        // K2 + K1: complement P3, a complete intersection of two quadrics
        r.dimension = n + 1;
        r.regularity = 2;
      }
      break;
    default:
      throw PreconditionError("trivial_report needs a no-edges, star or small-n input, got " +
                              to_string(c.classification));
  }
  r.depth = r.dimension;
  set_prime_characteristic_bounds(r, n, field);
  return r;
}

IdealPoset build_P_poset(const Girth5Input& c) {
  require_general(c, "build_P_poset");
  const Graph& g = c.graph;
  const Ideals ideals{g, g.vertices()};
  const CoreSubgraph h = core_subgraph(g);
  const std::vector<Edge> free = free_edges(g);

  std::vector<PrimeIdeal> elements;
  std::vector<std::string> tags;
  std::map<std::string, std::size_t> index;
  auto add = [&](std::string tag, PrimeIdeal q) {
    index.emplace(tag, elements.size());
    elements.push_back(std::move(q));
    tags.push_back(std::move(tag));
  };

  add("j", ideals.j());
  for (Vertex v : h.vertices) {
    add(vertex_tag("a", v), ideals.a(v));
    add(vertex_tag("b", v), ideals.b(v));
  }
  for (Edge e : free) {
    add(edge_tag("ap", e), ideals.pair_killed(e));
    add(edge_tag("bp", e), ideals.pair_block(e));
  }
  for (Edge e : h.graph.edges()) {
    add(edge_tag("c", e), ideals.pair_killed(e));
    add(edge_tag("d", e), ideals.pair_block(e));
  }
  for (Vertex v : h.vertices) {
    if (h.graph.degree(v) > 1) add(vertex_tag("e", v), ideals.e(v));
  }
  const bool with_m = has_maximal_ideal(free, h);
  if (with_m) add("m", PrimeIdeal::maximal(g.n()));

  const std::size_t k = elements.size();
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  auto rel = [&](const std::string& lo, const std::string& hi) { leq[index.at(lo)][index.at(hi)] = true; };

  for (Vertex v : h.vertices) {
    rel(vertex_tag("b", v), "j");
    rel(vertex_tag("b", v), vertex_tag("a", v));
  }
  for (Edge e : free) {
    rel(edge_tag("bp", e), "j");
    rel(edge_tag("bp", e), edge_tag("ap", e));
    if (with_m) rel("m", edge_tag("bp", e));
  }
  for (Edge e : h.graph.edges()) {
    rel(edge_tag("c", e), vertex_tag("a", e.u));
    rel(edge_tag("c", e), vertex_tag("a", e.v));
    rel(edge_tag("d", e), vertex_tag("b", e.u));
    rel(edge_tag("d", e), vertex_tag("b", e.v));
    rel(edge_tag("d", e), edge_tag("c", e));
    for (Vertex end : {e.u, e.v}) {
      if (h.graph.degree(end) > 1) rel(vertex_tag("e", end), edge_tag("d", e));
    }
  }
  if (with_m) {
    // m is the irrelevant ideal and so lies below every element under reverse
    // inclusion, including when no e_v or b' sits between them.
    for (std::size_t i = 0; i < k; ++i) leq[index.at("m")][i] = true;
  }

  for (std::size_t i = 0; i < k; ++i) leq[i][i] = true;
  for (std::size_t mid = 0; mid < k; ++mid) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!leq[i][mid]) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (leq[mid][j]) leq[i][j] = true;
      }
    }
  }
  return IdealPoset(std::move(elements), std::move(leq), std::move(tags));
}

LCDecomposition closed_form_decompose(const Girth5Input& c, Field field) {
  require_general(c, "closed_form_decompose");
  const Graph& g = c.graph;
  const std::size_t n = g.n();
  const Ideals ideals{g, g.vertices()};
  const CoreSubgraph h = core_subgraph(g);
  LCDecomposition out(n, field);

  for (Edge e : free_edges(g)) {
    out.add(4, {ideals.pair_killed(e), 4, 1, edge_tag("ap", e)});
    out.add(4, {ideals.pair_block(e), 3, 1, edge_tag("bp", e)});
  }
  for (Edge e : h.graph.edges()) {
    out.add(5, {ideals.pair_killed(e), 4, 1, edge_tag("c", e)});
    out.add(5, {ideals.pair_block(e), 3, 1, edge_tag("d", e)});
  }
  // v in V(H) lands in degree |N[v]| + 2, which lies in [5, n+1].
  for (Vertex v : h.vertices) {
    const std::size_t closed = g.closed_neighborhood(v).size();
    out.add(closed + 2, {ideals.a(v), closed + 2, 1, vertex_tag("a", v)});
    out.add(closed + 2, {ideals.b(v), closed + 1, 1, vertex_tag("b", v)});
  }
  out.add(n + 1, {ideals.j(), n + 1, 1, "j"});
  return out;
}

HomologicalReport closed_form_report(const Girth5Input& c, Field field) {
  require_general(c, "closed_form_report");
  const Graph& g = c.graph;
  const CoreSubgraph h = core_subgraph(g);
  // Lowest degree carrying a summand of closed_form_decompose.
  std::size_t depth = g.n() + 1;
  if (!free_edges(g).empty()) depth = 4;
  if (depth > 4 && h.graph.edge_count() > 0) depth = 5;
  for (Vertex v : h.vertices) depth = std::min(depth, g.closed_neighborhood(v).size() + 2);

  HomologicalReport r;
  r.depth = depth;
  r.dimension = g.n() + 1;
  r.cohen_macaulay = r.depth == r.dimension;
  r.regularity = h.graph.edge_count() == 0 ? 2 : 3;
  set_prime_characteristic_bounds(r, g.n(), field);
  return r;
}

namespace {

std::string describe(const HomologicalReport& r) {
  std::string s = "depth " + std::to_string(r.depth) + ", dim " + std::to_string(r.dimension) + ", CM " +
                  (r.cohen_macaulay ? "yes" : "no") + ", reg " + std::to_string(r.regularity);
  if (r.cohomological_dimension) s += ", cd " + std::to_string(*r.cohomological_dimension);
  return s;
}

void compare_posets(const IdealPoset& generic, const IdealPoset& closed, EquivalenceVerdict& v) {
  for (const auto& q : generic.elements()) {
    if (!closed.index_of(q)) v.diffs.push_back("only in generic poset: " + q.to_string());
  }
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (!generic.index_of(closed.element(i))) {
      v.diffs.push_back("only in closed-form poset: " + closed.label(i) + " = " + closed.element(i).to_string());
    }
  }
  if (!v.diffs.empty()) return;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = 0; j < closed.size(); ++j) {
      if (generic.leq(i, j) != closed.leq(i, j)) {
        v.diffs.push_back("order differs on " + closed.label(i) + " <= " + closed.label(j) + ": generic " +
                          (generic.leq(i, j) ? "true" : "false"));
      }
    }
  }
}

void compare_decompositions(const LCDecomposition& generic, const LCDecomposition& closed,
                            EquivalenceVerdict& v) {
  auto flatten = [](const LCDecomposition& d) {
    std::map<std::pair<std::size_t, std::string>, std::pair<std::size_t, std::size_t>> out;
    for (const auto& [r, list] : d.modules()) {
      for (const auto& s : list) out[{r, s.ideal.to_string()}] = {s.dimension, s.multiplicity};
    }
    return out;
  };
  auto a = flatten(generic);
  auto b = flatten(closed);
  for (const auto& [key, val] : a) {
    auto it = b.find(key);
    if (it == b.end() || it->second != val) {
      v.diffs.push_back("H^" + std::to_string(key.first) + " generic summand " + key.second + " (d=" +
                        std::to_string(val.first) + ", mult " + std::to_string(val.second) +
                        ") missing or different in closed form");
    }
  }
  for (const auto& [key, val] : b) {
    if (!a.count(key)) {
      v.diffs.push_back("H^" + std::to_string(key.first) + " closed-form summand " + key.second +
                        " missing in generic engine");
    }
  }
}

}  // namespace

EquivalenceVerdict verify_equivalence(const Girth5Input& c, Field field, const EngineLimits& limits) {
  require_general(c, "verify_equivalence");
  EquivalenceVerdict v;
  const Graph comp = complement(c.graph);

  IdealPoset closed_poset = build_P_poset(c);
  IdealPoset generic_poset = build_poset(associated_primes(comp, limits.max_subset_n), limits.max_poset_elements);
  compare_posets(generic_poset, closed_poset, v);
  v.poset_match = v.diffs.empty();
  if (v.poset_match) generic_poset.copy_tags_from(closed_poset);

  const std::size_t before = v.diffs.size();
  LCDecomposition generic = decompose_poset(generic_poset, c.graph.n(), field);
  LCDecomposition closed = closed_form_decompose(c, field);
  compare_decompositions(generic, closed, v);
  v.decomposition_match = v.diffs.size() == before && generic.same_as(closed);

  HomologicalReport generic_report = report(generic);
  HomologicalReport closed_report = closed_form_report(c, field);
  v.report_match = generic_report == closed_report;
  if (!v.report_match) {
    v.diffs.push_back("report: generic {" + describe(generic_report) + "} vs closed form {" +
                      describe(closed_report) + "}");
  }
  v.generic_poset = std::move(generic_poset);
  v.generic_decomposition = std::move(generic);
  v.generic_report = generic_report;
  return v;
}

}  // namespace beilc
