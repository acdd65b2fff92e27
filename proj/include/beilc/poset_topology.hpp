#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "beilc/exact_rank.hpp"
#include "beilc/ideal_poset.hpp"

namespace beilc {

/// Induced sub-poset on some elements of an IdealPoset.
struct SubPoset {
  std::vector<std::size_t> members;  // indices into the parent poset, ascending
  std::vector<std::uint8_t> less;    // members.size()^2, strict order in local indices

  std::size_t size() const { return members.size(); }
  bool is_less(std::size_t i, std::size_t j) const { return less[i * members.size() + j] != 0; }
};

/// Abstract simplicial complex on vertices 0..vertex_count-1 given by its facets.
///
/// Two degenerate states are distinct: the void complex has no faces at all,
/// while the empty complex has exactly one face, the empty set.
class SimplicialComplex {
 public:
  using Face = std::vector<std::size_t>;  // sorted

  static SimplicialComplex void_complex() { return SimplicialComplex(0, {}); }
  static SimplicialComplex empty_complex() { return SimplicialComplex(0, {Face{}}); }
  /// Keeps only inclusion-maximal facets; each facet is sorted.
  SimplicialComplex(std::size_t vertex_count, std::vector<Face> facets);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_empty() const { return facets_.size() == 1 && facets_.front().empty(); }
  /// Largest face dimension; -1 for the empty complex, -2 for the void complex.
  int dimension() const;

  /// All faces of dimension `dim` (dim = -1 gives the empty face), sorted.
  std::vector<Face> faces(int dim) const;
  /// f_{-1}, f_0, ..., f_dimension.
  std::vector<std::size_t> face_counts() const;
  /// A vertex lying in every facet (which makes the complex acyclic).
  bool is_cone() const;

 private:
  std::size_t vertex_count_;
  std::vector<Face> facets_;
};

/// dim_k of reduced cohomology in each degree i >= -1.
class CohomologyProfile {
 public:
  CohomologyProfile(Field field, std::map<int, std::size_t> dims);

  Field field() const { return field_; }
  std::size_t dim(int degree) const;
  /// Degrees with nonzero cohomology.
  const std::map<int, std::size_t>& nonzero() const { return dims_; }
  bool is_zero() const { return dims_.empty(); }
  /// Sum of (-1)^i dim H^i.
  long euler_characteristic() const;

  bool operator==(const CohomologyProfile&) const = default;

 private:
  Field field_;
  std::map<int, std::size_t> dims_;
};

/// {x : q < x < top}. Throws std::out_of_range unless q indexes an ideal.
SubPoset open_interval(const IdealPoset& p, std::size_t q);

/// Facets are the maximal chains; an empty poset gives the empty complex.
SimplicialComplex order_complex(const SubPoset& p);

/// Repeatedly removes elements with exactly one upper cover or exactly one
/// lower cover. The order complex keeps its homotopy type.
SubPoset without_beat_points(SubPoset p);

/// Reduced cohomology of the order complex, computed from the chains directly.
CohomologyProfile order_complex_cohomology(const SubPoset& p, Field field);

/// Reduced cohomology from ranks of the coboundary maps.
CohomologyProfile reduced_cohomology(const SimplicialComplex& c, Field field);

/// -1 + sum over nonempty faces of (-1)^dim, or 0 for the void complex.
long reduced_euler_characteristic(const SimplicialComplex& c);

/// M_{r,q} = dim H~^{r - dim(R/q) - 1}((q, top)).
std::size_t multiplicity(const IdealPoset& p, std::size_t q, int r, Field field);

/// Profile of every open interval (q, top), indexed like the poset.
std::vector<CohomologyProfile> interval_profiles(const IdealPoset& p, Field field);

}  // namespace beilc
