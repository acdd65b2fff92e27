#include "beilc/poset_topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "beilc/errors.hpp"

namespace beilc {

namespace {

constexpr std::size_t kMaxFacetSize = 24;

bool is_subset(const SimplicialComplex::Face& a, const SimplicialComplex::Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Coboundary delta^i : C^i -> C^{i+1}; row per (i+1)-face, column per i-face.
// Entry (tau, tau minus its k-th vertex) is (-1)^k.
SparseMatrix coboundary(const std::vector<SimplicialComplex::Face>& lower,
                        const std::vector<SimplicialComplex::Face>& upper) {
  SparseMatrix m;
  m.rows = upper.size();
  m.cols = lower.size();
  m.entries.resize(upper.size());
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const auto& tau = upper[r];
    for (std::size_t k = 0; k < tau.size(); ++k) {
      SimplicialComplex::Face sigma = tau;
      sigma.erase(sigma.begin() + static_cast<std::ptrdiff_t>(k));
      auto it = std::lower_bound(lower.begin(), lower.end(), sigma);
      m.entries[r].emplace_back(static_cast<std::size_t>(it - lower.begin()), k % 2 == 0 ? 1L : -1L);
    }
  }
  return m;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Face> facets)
    : vertex_count_(vertex_count) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (std::size_t v : f) {
      if (v >= vertex_count) throw std::invalid_argument("facet vertex out of range");
    }
    if (f.size() > kMaxFacetSize) throw BoundExceeded("facet too large to enumerate its faces");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < facets.size() && !dominated; ++j) {
      dominated = i != j && facets[i].size() < facets[j].size() && is_subset(facets[i], facets[j]);
    }
    if (!dominated) facets_.push_back(facets[i]);
  }
}

int SimplicialComplex::dimension() const {
  if (is_void()) return -2;
  std::size_t largest = 0;
  for (const auto& f : facets_) largest = std::max(largest, f.size());
  return static_cast<int>(largest) - 1;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::faces(int dim) const {
  std::set<Face> out;
  if (dim < -1) return {};
  const auto want = static_cast<std::size_t>(dim + 1);
  for (const auto& f : facets_) {
    if (f.size() < want) continue;
    // all `want`-subsets of f via a selection mask
    std::vector<bool> pick(f.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(want), true);
    do {
      Face face;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (pick[i]) face.push_back(f[i]);
      }
      out.insert(std::move(face));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {out.begin(), out.end()};
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> counts;
  for (int d = -1; d <= dimension(); ++d) counts.push_back(faces(d).size());
  return counts;
}

bool SimplicialComplex::is_cone() const {
  if (is_void() || is_empty()) return false;
  Face common = facets_.front();
  for (const auto& f : facets_) {
    Face next;
    std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(next));
    common = std::move(next);
  }
  return !common.empty();
}

CohomologyProfile::CohomologyProfile(Field field, std::map<int, std::size_t> dims) : field_(field) {
  for (auto [d, v] : dims) {
    if (d < -1) throw std::invalid_argument("reduced cohomology starts in degree -1");
    if (v != 0) dims_.emplace(d, v);
  }
}

std::size_t CohomologyProfile::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

long CohomologyProfile::euler_characteristic() const {
  long chi = 0;
  for (auto [d, v] : dims_) chi += (d % 2 == 0 ? 1L : -1L) * static_cast<long>(v);
  return chi;
}

SubPoset open_interval(const IdealPoset& p, std::size_t q) {
  if (q >= p.size()) {
    throw std::out_of_range("open interval requested for index " + std::to_string(q) + " which is not an ideal");
  }
  SubPoset sub;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.less(q, x)) sub.members.push_back(x);
  }
  const std::size_t k = sub.members.size();
  sub.less.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) sub.less[i * k + j] = p.less(sub.members[i], sub.members[j]) ? 1 : 0;
  }
  return sub;
}

SimplicialComplex order_complex(const SubPoset& p) {
  const std::size_t k = p.size();
  if (k == 0) return SimplicialComplex::empty_complex();
  // Maximal chains are the saturated chains from a minimal to a maximal element.
  auto covers = [&](std::size_t i, std::size_t j) {
    if (!p.is_less(i, j)) return false;
    for (std::size_t m = 0; m < k; ++m) {
      if (p.is_less(i, m) && p.is_less(m, j)) return false;
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> up(k);
  std::vector<bool> has_lower(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (covers(i, j)) {
        up[i].push_back(j);
        has_lower[j] = true;
      }
    }
  }
  std::vector<SimplicialComplex::Face> facets;
  SimplicialComplex::Face chain;
  auto extend = [&](auto&& self, std::size_t x) -> void {
    chain.push_back(x);
    if (up[x].empty()) {
      facets.push_back(chain);
    } else {
      for (std::size_t y : up[x]) self(self, y);
    }
    chain.pop_back();
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (!has_lower[i]) extend(extend, i);
  }
  return SimplicialComplex(k, std::move(facets));
}

long reduced_euler_characteristic(const SimplicialComplex& c) {
  long chi = 0;
  int sign = -1;  // degree -1
  for (std::size_t f : c.face_counts()) {
    chi += sign * static_cast<long>(f);
    sign = -sign;
  }
  return chi;
}

namespace {

// faces[i + 1] holds the i-dimensional faces, each sorted, the list sorted.
CohomologyProfile cohomology_from_faces(const std::vector<std::vector<SimplicialComplex::Face>>& faces,
                                        Field field) {
  // rank of delta^i for i = -1 .. top-1; delta^{-2} and delta^{top} are zero.
  std::vector<std::size_t> ranks(faces.size(), 0);
  for (std::size_t i = 0; i + 1 < faces.size(); ++i) ranks[i] = rank(coboundary(faces[i], faces[i + 1]), field);

  std::map<int, std::size_t> dims;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::size_t incoming = i == 0 ? 0 : ranks[i - 1];
    dims[static_cast<int>(i) - 1] = faces[i].size() - ranks[i] - incoming;
  }
  return CohomologyProfile(field, std::move(dims));
}

std::vector<std::vector<std::size_t>> upper_covers(const SubPoset& p) {
  const std::size_t k = p.size();
  std::vector<std::vector<std::size_t>> up(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!p.is_less(i, j)) continue;
      bool between = false;
      for (std::size_t m = 0; m < k && !between; ++m) between = p.is_less(i, m) && p.is_less(m, j);
      if (!between) up[i].push_back(j);
    }
  }
  return up;
}

}  // namespace

CohomologyProfile reduced_cohomology(const SimplicialComplex& c, Field field) {
  if (c.is_void()) return CohomologyProfile(field, {});
  std::vector<std::vector<SimplicialComplex::Face>> faces;
  for (int d = -1; d <= c.dimension(); ++d) faces.push_back(c.faces(d));
  return cohomology_from_faces(faces, field);
}

SubPoset without_beat_points(SubPoset p) {
  while (true) {
    const std::size_t k = p.size();
    const auto up = upper_covers(p);
    std::vector<std::size_t> down_count(k, 0);
    for (const auto& list : up) {
      for (std::size_t j : list) ++down_count[j];
    }
    std::size_t beat = k;
    for (std::size_t i = 0; i < k && beat == k; ++i) {
      if (up[i].size() == 1 || down_count[i] == 1) beat = i;
    }
    if (beat == k) return p;
    SubPoset next;
    for (std::size_t i = 0; i < k; ++i) {
      if (i != beat) next.members.push_back(p.members[i]);
    }
    const std::size_t m = k - 1;
    next.less.assign(m * m, 0);
    for (std::size_t i = 0, a = 0; i < k; ++i) {
      if (i == beat) continue;
      for (std::size_t j = 0, b = 0; j < k; ++j) {
        if (j == beat) continue;
        next.less[a * m + b] = p.less[i * k + j];
        ++b;
      }
      ++a;
    }
    p = std::move(next);
  }
}

CohomologyProfile order_complex_cohomology(const SubPoset& p, Field field) {
  const std::size_t k = p.size();
  std::vector<std::vector<std::size_t>> above(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (p.is_less(i, j)) above[i].push_back(j);
    }
  }
  // Every chain, listed once in increasing order; stored sorted by vertex id.
  std::vector<std::vector<SimplicialComplex::Face>> faces(1, {SimplicialComplex::Face{}});
  SimplicialComplex::Face chain;
  auto extend = [&](auto&& self, std::size_t x) -> void {
    chain.push_back(x);
    if (faces.size() <= chain.size()) faces.emplace_back();
    SimplicialComplex::Face sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    faces[chain.size()].push_back(std::move(sorted));
    for (std::size_t y : above[x]) self(self, y);
    chain.pop_back();
  };
  for (std::size_t i = 0; i < k; ++i) extend(extend, i);
  for (auto& list : faces) std::sort(list.begin(), list.end());
  return cohomology_from_faces(faces, field);
}

std::size_t multiplicity(const IdealPoset& p, std::size_t q, int r, Field field) {
  auto profile = order_complex_cohomology(without_beat_points(open_interval(p, q)), field);
  int degree = r - static_cast<int>(p.element(q).dimension()) - 1;
  return degree < -1 ? 0 : profile.dim(degree);
}

std::vector<CohomologyProfile> interval_profiles(const IdealPoset& p, Field field) {
  std::vector<CohomologyProfile> out;
  out.reserve(p.size());
  for (std::size_t q = 0; q < p.size(); ++q) {
    out.push_back(order_complex_cohomology(without_beat_points(open_interval(p, q)), field));
  }
  return out;
}

}  // namespace beilc
