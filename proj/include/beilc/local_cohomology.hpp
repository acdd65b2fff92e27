#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beilc/exact_rank.hpp"
#include "beilc/graph.hpp"
#include "beilc/ideal_poset.hpp"

namespace beilc {

/// Size guards for the generic engine.
struct EngineLimits {
  std::size_t max_subset_n = kDefaultMaxSubsetN;
  std::size_t max_poset_elements = kDefaultMaxPosetElements;
};

/// One summand H^d_m(R/q)^multiplicity of H^r_m(R/J).
struct Summand {
  PrimeIdeal ideal;
  std::size_t dimension;     // d_q
  std::size_t multiplicity;  // M_{r,q} > 0
  std::string tag;           // symbolic name when known, otherwise empty
};

/// H^r_m(R/J) for every r, as sums of top local cohomology of the primes q.
class LCDecomposition {
 public:
  LCDecomposition(std::size_t n, Field field) : n_(n), field_(field) {}

  std::size_t n() const { return n_; }
  Field field() const { return field_; }
  const std::map<std::size_t, std::vector<Summand>>& modules() const { return modules_; }
  bool empty() const { return modules_.empty(); }

  /// Adds a summand to H^r; zero multiplicities are ignored. Throws if q already appears in H^r.
  void add(std::size_t r, Summand s);

  /// Smallest / largest r with a nonzero module. Throws std::logic_error if empty.
  std::size_t depth() const;
  std::size_t dimension() const;

  /// Same summands (ideal, d, multiplicity) in every degree; tags are ignored.
  bool same_as(const LCDecomposition& other) const;

 private:
  std::size_t n_;
  Field field_;
  std::map<std::size_t, std::vector<Summand>> modules_;  // each list sorted by ideal
};

struct AraBounds {
  std::size_t lower;
  std::size_t upper;
  bool operator==(const AraBounds&) const = default;
};

struct HomologicalReport {
  std::size_t depth = 0;
  std::size_t dimension = 0;
  bool cohen_macaulay = false;
  std::size_t regularity = 0;
  /// Only in prime characteristic.
  std::optional<std::size_t> cohomological_dimension;
  std::optional<AraBounds> ara;

  bool operator==(const HomologicalReport&) const = default;
};

/// Decomposition of H^*_m(R/J(g)) from the poset of J(g).
LCDecomposition decompose(const Graph& g, Field field, const EngineLimits& limits = {});
/// Same, from an already built poset on n vertices. Tags of the poset are copied onto summands.
LCDecomposition decompose_poset(const IdealPoset& poset, std::size_t n, Field field);

using RegularityFn = std::function<std::size_t(const PrimeIdeal&)>;

/// Depth, dimension, CM, regularity as max reg(R/q) - d_q + r over all summands,
/// and cd = 2n - depth with ara in [cd, 2n] in prime characteristic.
/// Throws std::logic_error on an empty decomposition.
HomologicalReport report(const LCDecomposition& d, const RegularityFn& reg_per_prime = {});

/// Fills cohomological dimension and arithmetic-rank bounds from the depth when
/// the characteristic is prime; clears them otherwise.
void set_prime_characteristic_bounds(HomologicalReport& r, std::size_t n, Field field);

}  // namespace beilc
