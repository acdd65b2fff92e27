#include "beilc/prime_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace beilc {

PrimeIdeal::PrimeIdeal(std::size_t n, VertexSet killed, std::vector<VertexSet> blocks)
    : n_(n), killed_(killed) {
  const VertexSet all = VertexSet::range(n);
  if (!killed.is_subset_of(all)) throw std::invalid_argument("killed set leaves 1..n");
  VertexSet used = killed;
  for (VertexSet b : blocks) {
    if (!b.is_subset_of(all)) throw std::invalid_argument("block " + beilc::to_string(b) + " leaves 1..n");
    if (b.intersects(used)) {
      throw std::invalid_argument("block " + beilc::to_string(b) + " overlaps the killed set or another block");
    }
    used |= b;
    if (b.size() >= 2) blocks_.push_back(b);
  }
  std::sort(blocks_.begin(), blocks_.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
}

VertexSet PrimeIdeal::free_vertices() const {
  VertexSet rest = VertexSet::range(n_) - killed_;
  for (VertexSet b : blocks_) rest -= b;
  return rest;
}

std::size_t PrimeIdeal::dimension() const {
  std::size_t d = 2 * free_vertices().size();
  for (VertexSet b : blocks_) d += b.size() + 1;
  return d;
}

bool PrimeIdeal::contains(const PrimeIdeal& other) const {
  if (!other.killed_.is_subset_of(killed_)) return false;
  // delta_ij is in *this iff i or j is killed here, or i and j share a block here.
  for (VertexSet b : other.blocks_) {
    VertexSet live = b - killed_;
    if (live.size() <= 1) continue;
    bool inside = std::any_of(blocks_.begin(), blocks_.end(), [&](VertexSet mine) { return live.is_subset_of(mine); });
    if (!inside) return false;
  }
  return true;
}

std::string PrimeIdeal::to_string() const {
  std::string out;
  if (!killed_.empty()) {
    out += "(x,y:";
    bool first = true;
    for (Vertex v : killed_) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    out += ')';
  }
  for (VertexSet b : blocks_) {
    if (!out.empty()) out += '+';
    out += "J(K" + beilc::to_string(b) + ")";
  }
  return out.empty() ? "0" : out;
}

std::strong_ordering PrimeIdeal::operator<=>(const PrimeIdeal& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = killed_ <=> other.killed_; c != 0) return c;
  return std::lexicographical_compare_three_way(blocks_.begin(), blocks_.end(), other.blocks_.begin(),
                                                other.blocks_.end());
}

PrimeIdeal prime_from_cut_set(const Graph& g, const CutSet& s) {
  return PrimeIdeal(g.n(), s.vertices, connected_components(g, s.vertices));
}

namespace {

// V(J(K_B1) + J(K_B2)) with B1 and B2 overlapping in C: if some column of C
// is nonzero every column of B1 ∪ B2 is proportional to it, otherwise all of
// C vanishes. So the variety splits into "merge the blocks" and "kill C".
void split_components(std::size_t n, VertexSet killed, std::vector<VertexSet> blocks, std::vector<PrimeIdeal>& out) {
  std::vector<VertexSet> live;
  for (VertexSet b : blocks) {
    b -= killed;
    if (b.size() >= 2) live.push_back(b);
  }
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      if (!live[i].intersects(live[j])) continue;
      std::vector<VertexSet> merged;
      for (std::size_t k = 0; k < live.size(); ++k) {
        if (k != i && k != j) merged.push_back(live[k]);
      }
      merged.push_back(live[i] | live[j]);
      split_components(n, killed, std::move(merged), out);
      split_components(n, killed | (live[i] & live[j]), live, out);
      return;
    }
  }
  out.emplace_back(n, killed, std::move(live));
}

}  // namespace

std::vector<PrimeIdeal> sum_decompose(const PrimeIdeal& a, const PrimeIdeal& b) {
  if (a.n() != b.n()) throw std::invalid_argument("sum of ideals in different rings");
  std::vector<VertexSet> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  std::vector<PrimeIdeal> candidates;
  split_components(a.n(), a.killed() | b.killed(), std::move(blocks), candidates);

  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<PrimeIdeal> minimal;
  for (const auto& c : candidates) {
    bool redundant = std::any_of(candidates.begin(), candidates.end(),
                                 [&](const PrimeIdeal& other) { return other != c && c.contains(other); });
    if (!redundant) minimal.push_back(c);
  }
  return minimal;
}

std::vector<PrimeIdeal> associated_primes(const Graph& g, std::size_t max_subset_n) {
  std::vector<PrimeIdeal> out;
  for (const CutSet& s : cut_sets(g, max_subset_n)) out.push_back(prime_from_cut_set(g, s));
  std::sort(out.begin(), out.end());
  for (const auto& p : out) {
    for (const auto& q : out) {
      if (p != q && p.contains(q)) {
        throw std::logic_error("cut-set primes " + p.to_string() + " and " + q.to_string() + " are comparable");
      }
    }
  }
  return out;
}

}  // namespace beilc
