#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "beilc/cut_sets.hpp"
#include "beilc/graph.hpp"

namespace beilc {

/// A prime of k[x_1..x_n, y_1..y_n] of the form
///
///     (x_i, y_i : i in killed) + sum over blocks B of J(K_B),
///
/// kept combinatorially. Blocks are pairwise disjoint, disjoint from the
/// killed set and have at least two vertices; vertices in neither are free.
/// The canonical form sorts blocks by their minimum vertex, so equal ideals
/// compare equal.
class PrimeIdeal {
 public:
  /// Drops blocks with fewer than two vertices. Throws std::invalid_argument
  /// if blocks overlap each other or the killed set, or leave 1..n.
  PrimeIdeal(std::size_t n, VertexSet killed, std::vector<VertexSet> blocks);

  /// The irrelevant ideal m.
  static PrimeIdeal maximal(std::size_t n) { return PrimeIdeal(n, VertexSet::range(n), {}); }
  /// J(K_S) for a single vertex set S.
  static PrimeIdeal complete(std::size_t n, VertexSet s) { return PrimeIdeal(n, {}, {s}); }

  std::size_t n() const { return n_; }
  VertexSet killed() const { return killed_; }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  VertexSet free_vertices() const;

  /// Krull dimension of R/q: |B| + 1 per block, 2 per free vertex.
  std::size_t dimension() const;

  /// Castelnuovo-Mumford regularity of R/q: one per block. Killed and free
  /// variables leave regularity unchanged, and each R/J(K_B) has regularity 1.
  std::size_t regularity() const { return blocks_.size(); }

  /// Ideal containment `*this ⊇ other`: every generator x_i, y_i, delta_ij of
  /// `other` lies in `*this`.
  bool contains(const PrimeIdeal& other) const;

  /// "(x,y:2,5)+J(K{1,3,4})"; the zero ideal prints as "0".
  std::string to_string() const;

  bool operator==(const PrimeIdeal&) const = default;
  std::strong_ordering operator<=>(const PrimeIdeal& other) const;

 private:
  std::size_t n_;
  VertexSet killed_;
  std::vector<VertexSet> blocks_;
};

/// P_S(G): kill S, one block per component of G minus S with at least two vertices.
PrimeIdeal prime_from_cut_set(const Graph& g, const CutSet& s);

/// Minimal primes of a + b, canonical and sorted.
std::vector<PrimeIdeal> sum_decompose(const PrimeIdeal& a, const PrimeIdeal& b);

/// {P_S(g) : S in C(g)}, sorted. Throws BoundExceeded from cut-set enumeration.
std::vector<PrimeIdeal> associated_primes(const Graph& g, std::size_t max_subset_n = kDefaultMaxSubsetN);

}  // namespace beilc
