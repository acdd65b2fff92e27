#pragma once

#include <cstddef>
#include <vector>

#include "beilc/graph.hpp"

namespace beilc {

/// Default largest n for which cut sets are enumerated over all 2^n subsets.
inline constexpr std::size_t kDefaultMaxSubsetN = 22;

/// A member S of C(G) together with c(S), the number of components of G minus S.
struct CutSet {
  VertexSet vertices;
  std::size_t component_count = 0;
  bool operator==(const CutSet&) const = default;
};

/// All cut sets of g by subset enumeration, ordered by (|S|, S).
/// Throws BoundExceeded if g.n() > max_n.
std::vector<CutSet> cut_sets(const Graph& g, std::size_t max_n = kDefaultMaxSubsetN);

/// Cut sets of the complement of g from the neighbourhoods of the core and the free edges.
/// Requires girth >= 5, no universal vertex, an edge, and n >= 4 (PreconditionError otherwise).
std::vector<CutSet> cut_sets_girth5(const Graph& g);

/// True iff every v in s reconnects at least two components of g minus s (or s is empty).
bool is_cut_set(const Graph& g, VertexSet s);

}  // namespace beilc
